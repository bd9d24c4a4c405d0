/*
 * C interface to the pdstat library: distances, geodesics, means and medians
 * of persistence diagrams.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a pdstat_status; on
 * failure pdstat_last_error() describes the problem for the calling thread.
 * The exponent p is passed as a double; use INFINITY for p = inf.
 */
#ifndef PDSTAT_H
#define PDSTAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PDSTAT_BUILDING)
#    define PDSTAT_API __declspec(dllexport)
#  else
#    define PDSTAT_API __declspec(dllimport)
#  endif
#else
#  define PDSTAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pdstat_diagram pdstat_diagram;
typedef struct pdstat_pairing pdstat_pairing;
typedef struct pdstat_report pdstat_report;

typedef enum {
  PDSTAT_OK = 0,
  PDSTAT_ERR_PARSE = 1,
  PDSTAT_ERR_INVARIANT = 2,
  PDSTAT_ERR_ESSENTIAL_POINT = 3,
  PDSTAT_ERR_SIZE_LIMIT = 4,
  PDSTAT_ERR_INFEASIBLE = 5,
  PDSTAT_ERR_INVALID_ARGUMENT = 6,
  PDSTAT_ERR_IO = 7,
  PDSTAT_ERR_INTERNAL = 8
} pdstat_status;

typedef enum {
  PDSTAT_METHOD_EXHAUSTIVE = 0,
  PDSTAT_METHOD_ALTERNATING = 1
} pdstat_method;

PDSTAT_API const char* pdstat_version(void);
PDSTAT_API const char* pdstat_status_name(pdstat_status status);
/* Message of the last failed call on this thread; "" if none. */
PDSTAT_API const char* pdstat_last_error(void);

/* ---- diagrams ---------------------------------------------------------- */

PDSTAT_API pdstat_status pdstat_diagram_create(const double* births,
                                               const double* deaths, size_t n,
                                               pdstat_diagram** out);
PDSTAT_API pdstat_status pdstat_diagram_parse(const char* text,
                                              pdstat_diagram** out);
PDSTAT_API pdstat_status pdstat_diagram_load(const char* path,
                                             pdstat_diagram** out);
PDSTAT_API pdstat_status pdstat_diagram_save(const pdstat_diagram* d,
                                             const char* path);
/* Writes the text format into buf (NUL-terminated, truncated to capacity)
 * and the full length excluding the NUL into *needed. */
PDSTAT_API pdstat_status pdstat_diagram_format(const pdstat_diagram* d,
                                               char* buf, size_t capacity,
                                               size_t* needed);
PDSTAT_API size_t pdstat_diagram_size(const pdstat_diagram* d);
PDSTAT_API pdstat_status pdstat_diagram_point(const pdstat_diagram* d,
                                              size_t index, double* birth,
                                              double* death);
PDSTAT_API void pdstat_diagram_free(pdstat_diagram* d);

/* ---- metric ------------------------------------------------------------ */

/* d_p(x, y). out_pairing may be NULL. */
PDSTAT_API pdstat_status pdstat_distance(const pdstat_diagram* x,
                                         const pdstat_diagram* y, double p,
                                         double* out_distance,
                                         pdstat_pairing** out_pairing);
PDSTAT_API size_t pdstat_pairing_size(const pdstat_pairing* pairing);
/* Indices into x and y; -1 denotes a copy of the diagonal. */
PDSTAT_API pdstat_status pdstat_pairing_entry(const pdstat_pairing* pairing,
                                              size_t index, int64_t* left,
                                              int64_t* right);
PDSTAT_API double pdstat_pairing_cost(const pdstat_pairing* pairing);
PDSTAT_API void pdstat_pairing_free(pdstat_pairing* pairing);

PDSTAT_API pdstat_status pdstat_count_optimal_pairings(
    const pdstat_diagram* x, const pdstat_diagram* y, double p,
    double tolerance, size_t cap, size_t* out_count);

PDSTAT_API pdstat_status pdstat_geodesic(const pdstat_diagram* x,
                                         const pdstat_diagram* y, double t,
                                         double p, pdstat_diagram** out);

/* ---- central tendencies ------------------------------------------------ */

typedef struct {
  double p;             /* 1 = median, 2 = mean */
  pdstat_method method;
  double tolerance;     /* tie tolerance on F_p and d_inf distinctness */
  size_t cap;           /* max total off-diagonal points for enumeration */
  int all_starts;       /* alternating: restart from every input */
  size_t max_iter;      /* alternating iteration limit */
  unsigned jobs;        /* worker threads */
} pdstat_center_options;

PDSTAT_API void pdstat_center_options_init(pdstat_center_options* options);

PDSTAT_API pdstat_status pdstat_cost(const pdstat_diagram* y,
                                     const pdstat_diagram* const* xs, size_t n,
                                     double p, double* out_value);

PDSTAT_API pdstat_status pdstat_center(const pdstat_diagram* const* xs,
                                       size_t n,
                                       const pdstat_center_options* options,
                                       pdstat_report** out);
PDSTAT_API size_t pdstat_report_count(const pdstat_report* report);
/* New handle for minimum `index`; free it with pdstat_diagram_free. */
PDSTAT_API pdstat_status pdstat_report_candidate(const pdstat_report* report,
                                                 size_t index,
                                                 pdstat_diagram** out,
                                                 double* cost);
PDSTAT_API int pdstat_report_unique(const pdstat_report* report);
PDSTAT_API int pdstat_report_exhaustive(const pdstat_report* report);
PDSTAT_API int pdstat_report_even_count(const pdstat_report* report);
/* 1 holds, 0 violated, -1 not applicable (means). */
PDSTAT_API int pdstat_report_point_bound(const pdstat_report* report);
/* 1 unique, 0 not unique, -1 unknown or not applicable. */
PDSTAT_API int pdstat_report_pairings_unique(const pdstat_report* report);
PDSTAT_API int pdstat_report_converged(const pdstat_report* report);
PDSTAT_API size_t pdstat_report_matchings(const pdstat_report* report);
PDSTAT_API size_t pdstat_report_candidates(const pdstat_report* report);
PDSTAT_API size_t pdstat_report_iterations(const pdstat_report* report);
PDSTAT_API void pdstat_report_free(pdstat_report* report);

typedef struct {
  int hypothesis_holds;
  size_t pairing_combinations;
  int improving_perturbation_found;
  double best_improvement;
  size_t perturbations_tried;
} pdstat_probe_result;

PDSTAT_API pdstat_status pdstat_conjecture_probe(
    const pdstat_diagram* const* xs, size_t n, const pdstat_diagram* w,
    uint64_t seed, size_t samples, double tolerance, size_t cap,
    pdstat_probe_result* out);

/* ---- curvature --------------------------------------------------------- */

typedef struct {
  double lhs;
  double rhs;
  double defect;
} pdstat_alexandrov;

/* One probe per optimal pairing of x and y. Writes up to `capacity` probes
 * and the total number into *count. */
PDSTAT_API pdstat_status pdstat_alexandrov_probes(
    const pdstat_diagram* x, const pdstat_diagram* y,
    const pdstat_diagram* z, double t, double p, double tolerance, size_t cap,
    pdstat_alexandrov* probes, size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* PDSTAT_H */
