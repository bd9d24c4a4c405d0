#include "pdstat/pdstat.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "pdstat/central.hpp"
#include "pdstat/errors.hpp"
#include "pdstat/geometry.hpp"
#include "pdstat/metric.hpp"

struct pdstat_diagram {
  pdstat::Diagram value;
};

struct pdstat_pairing {
  pdstat::Pairing value;
};

struct pdstat_report {
  pdstat::TendencyReport value;
};

namespace {

thread_local std::string last_error;

pdstat_status status_of(pdstat::ErrorCode code) {
  switch (code) {
    case pdstat::ErrorCode::Parse: return PDSTAT_ERR_PARSE;
    case pdstat::ErrorCode::Invariant: return PDSTAT_ERR_INVARIANT;
    case pdstat::ErrorCode::EssentialPoint: return PDSTAT_ERR_ESSENTIAL_POINT;
    case pdstat::ErrorCode::SizeLimit: return PDSTAT_ERR_SIZE_LIMIT;
    case pdstat::ErrorCode::Infeasible: return PDSTAT_ERR_INFEASIBLE;
    case pdstat::ErrorCode::InvalidArgument: return PDSTAT_ERR_INVALID_ARGUMENT;
    case pdstat::ErrorCode::Io: return PDSTAT_ERR_IO;
  }
  return PDSTAT_ERR_INTERNAL;
}

pdstat_status fail(pdstat_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
pdstat_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return PDSTAT_OK;
  } catch (const pdstat::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PDSTAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PDSTAT_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw pdstat::InvalidArgumentError(what);
}

std::vector<pdstat::Diagram> collect(const pdstat_diagram* const* xs,
                                     size_t n) {
  require(xs != nullptr || n == 0, "null diagram list");
  std::vector<pdstat::Diagram> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    require(xs[i] != nullptr, "null diagram in list");
    out.push_back(xs[i]->value);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pdstat_version(void) { return "1.0.0"; }

const char* pdstat_status_name(pdstat_status status) {
  switch (status) {
    case PDSTAT_OK: return "ok";
    case PDSTAT_ERR_PARSE: return "parse error";
    case PDSTAT_ERR_INVARIANT: return "invariant violation";
    case PDSTAT_ERR_ESSENTIAL_POINT: return "essential point";
    case PDSTAT_ERR_SIZE_LIMIT: return "size limit exceeded";
    case PDSTAT_ERR_INFEASIBLE: return "infeasible";
    case PDSTAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PDSTAT_ERR_IO: return "i/o error";
    case PDSTAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* pdstat_last_error(void) { return last_error.c_str(); }

pdstat_status pdstat_diagram_create(const double* births,
                                    const double* deaths, size_t n,
                                    pdstat_diagram** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(n == 0 || (births && deaths), "null coordinate array");
    std::vector<pdstat::PlanePoint> points(n);
    for (size_t i = 0; i < n; ++i) points[i] = {births[i], deaths[i]};
    *out = new pdstat_diagram{pdstat::Diagram(std::move(points))};
  });
}

pdstat_status pdstat_diagram_parse(const char* text, pdstat_diagram** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new pdstat_diagram{pdstat::parse_diagram(text)};
  });
}

pdstat_status pdstat_diagram_load(const char* path, pdstat_diagram** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new pdstat_diagram{pdstat::load_diagram(path)};
  });
}

pdstat_status pdstat_diagram_save(const pdstat_diagram* d, const char* path) {
  return guarded([&] {
    require(d && path, "null argument");
    pdstat::save_diagram(d->value, path);
  });
}

pdstat_status pdstat_diagram_format(const pdstat_diagram* d, char* buf,
                                    size_t capacity, size_t* needed) {
  return guarded([&] {
    require(d != nullptr, "null diagram");
    const std::string text = pdstat::format_diagram(d->value);
    if (needed) *needed = text.size();
    if (buf && capacity > 0) {
      const size_t n = std::min(capacity - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

size_t pdstat_diagram_size(const pdstat_diagram* d) {
  return d ? d->value.size() : 0;
}

pdstat_status pdstat_diagram_point(const pdstat_diagram* d, size_t index,
                                   double* birth, double* death) {
  return guarded([&] {
    require(d && birth && death, "null argument");
    require(index < d->value.size(), "point index out of range");
    *birth = d->value[index].birth;
    *death = d->value[index].death;
  });
}

void pdstat_diagram_free(pdstat_diagram* d) { delete d; }

pdstat_status pdstat_distance(const pdstat_diagram* x, const pdstat_diagram* y,
                              double p, double* out_distance,
                              pdstat_pairing** out_pairing) {
  return guarded([&] {
    require(x && y && out_distance, "null argument");
    auto result = pdstat::dp_distance(x->value, y->value, pdstat::Exponent(p));
    *out_distance = result.distance;
    if (out_pairing) *out_pairing = new pdstat_pairing{std::move(result.pairing)};
  });
}

size_t pdstat_pairing_size(const pdstat_pairing* pairing) {
  return pairing ? pairing->value.pairs.size() : 0;
}

pdstat_status pdstat_pairing_entry(const pdstat_pairing* pairing, size_t index,
                                   int64_t* left, int64_t* right) {
  return guarded([&] {
    require(pairing && left && right, "null argument");
    require(index < pairing->value.pairs.size(), "pair index out of range");
    const auto& e = pairing->value.pairs[index];
    *left = e.left ? static_cast<int64_t>(*e.left) : -1;
    *right = e.right ? static_cast<int64_t>(*e.right) : -1;
  });
}

double pdstat_pairing_cost(const pdstat_pairing* pairing) {
  return pairing ? pairing->value.cost : NAN;
}

void pdstat_pairing_free(pdstat_pairing* pairing) { delete pairing; }

pdstat_status pdstat_count_optimal_pairings(const pdstat_diagram* x,
                                            const pdstat_diagram* y, double p,
                                            double tolerance, size_t cap,
                                            size_t* out_count) {
  return guarded([&] {
    require(x && y && out_count, "null argument");
    *out_count = pdstat::all_optimal_pairings(x->value, y->value,
                                              pdstat::Exponent(p), tolerance,
                                              cap)
                     .size();
  });
}

pdstat_status pdstat_geodesic(const pdstat_diagram* x, const pdstat_diagram* y,
                              double t, double p, pdstat_diagram** out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = new pdstat_diagram{
        pdstat::geodesic_point(x->value, y->value, t, pdstat::Exponent(p))};
  });
}

void pdstat_center_options_init(pdstat_center_options* options) {
  if (!options) return;
  options->p = 2.0;
  options->method = PDSTAT_METHOD_EXHAUSTIVE;
  options->tolerance = 1e-9;
  options->cap = 10;
  options->all_starts = 0;
  options->max_iter = 100;
  options->jobs = 1;
}

pdstat_status pdstat_cost(const pdstat_diagram* y,
                          const pdstat_diagram* const* xs, size_t n, double p,
                          double* out_value) {
  return guarded([&] {
    require(y && out_value, "null argument");
    const auto inputs = collect(xs, n);
    *out_value = pdstat::evaluate_cost(y->value, inputs, pdstat::Exponent(p));
  });
}

pdstat_status pdstat_center(const pdstat_diagram* const* xs, size_t n,
                            const pdstat_center_options* options,
                            pdstat_report** out) {
  return guarded([&] {
    require(options && out, "null argument");
    require(options->cap >= 1, "cap must be at least 1");
    const auto inputs = collect(xs, n);
    const auto stat = pdstat::statistic_for(pdstat::Exponent(options->p));
    pdstat::CenterOptions center;
    center.tolerance = options->tolerance;
    center.cap = options->cap;
    center.jobs = std::max(1u, options->jobs);
    pdstat::TendencyReport report;
    if (options->method == PDSTAT_METHOD_EXHAUSTIVE) {
      report = pdstat::exhaustive_center(inputs, stat, center);
    } else {
      pdstat::AlternatingOptions alt;
      alt.max_iter = options->max_iter;
      report = pdstat::alternating_report(inputs, stat,
                                          options->all_starts != 0, alt,
                                          center);
    }
    *out = new pdstat_report{std::move(report)};
  });
}

size_t pdstat_report_count(const pdstat_report* report) {
  return report ? report->value.minima.size() : 0;
}

pdstat_status pdstat_report_candidate(const pdstat_report* report,
                                      size_t index, pdstat_diagram** out,
                                      double* cost) {
  return guarded([&] {
    require(report && out, "null argument");
    require(index < report->value.minima.size(), "candidate index out of range");
    const auto& r = report->value.minima[index];
    *out = new pdstat_diagram{r.candidate};
    if (cost) *cost = r.cost;
  });
}

int pdstat_report_unique(const pdstat_report* report) {
  return report && report->value.unique ? 1 : 0;
}

int pdstat_report_exhaustive(const pdstat_report* report) {
  return report && report->value.exhaustive ? 1 : 0;
}

int pdstat_report_even_count(const pdstat_report* report) {
  return report && report->value.even_count ? 1 : 0;
}

int pdstat_report_point_bound(const pdstat_report* report) {
  if (!report || !report->value.point_bound_ok) return -1;
  return *report->value.point_bound_ok ? 1 : 0;
}

int pdstat_report_pairings_unique(const pdstat_report* report) {
  if (!report || !report->value.pairings_unique) return -1;
  return *report->value.pairings_unique ? 1 : 0;
}

int pdstat_report_converged(const pdstat_report* report) {
  return report && report->value.converged ? 1 : 0;
}

size_t pdstat_report_matchings(const pdstat_report* report) {
  return report ? report->value.matchings_enumerated : 0;
}

size_t pdstat_report_candidates(const pdstat_report* report) {
  return report ? report->value.candidates_evaluated : 0;
}

size_t pdstat_report_iterations(const pdstat_report* report) {
  return report ? report->value.iterations : 0;
}

void pdstat_report_free(pdstat_report* report) { delete report; }

pdstat_status pdstat_conjecture_probe(const pdstat_diagram* const* xs,
                                      size_t n, const pdstat_diagram* w,
                                      uint64_t seed, size_t samples,
                                      double tolerance, size_t cap,
                                      pdstat_probe_result* out) {
  return guarded([&] {
    require(w && out, "null argument");
    const auto inputs = collect(xs, n);
    pdstat::ProbeOptions options;
    options.seed = seed;
    options.samples = samples;
    options.tolerance = tolerance;
    options.cap = cap;
    const auto r = pdstat::conjecture_probe(inputs, w->value, options);
    out->hypothesis_holds = r.hypothesis_holds ? 1 : 0;
    out->pairing_combinations = r.pairing_combinations;
    out->improving_perturbation_found = r.improving_perturbation_found ? 1 : 0;
    out->best_improvement = r.best_improvement;
    out->perturbations_tried = r.perturbations_tried;
  });
}

pdstat_status pdstat_alexandrov_probes(const pdstat_diagram* x,
                                       const pdstat_diagram* y,
                                       const pdstat_diagram* z, double t,
                                       double p, double tolerance, size_t cap,
                                       pdstat_alexandrov* probes,
                                       size_t capacity, size_t* count) {
  return guarded([&] {
    require(x && y && z && count, "null argument");
    require(probes || capacity == 0, "null probe buffer");
    const auto all = pdstat::alexandrov_probes(
        x->value, y->value, z->value, t, pdstat::Exponent(p), tolerance, cap);
    *count = all.size();
    for (size_t i = 0; i < std::min(capacity, all.size()); ++i) {
      probes[i] = {all[i].lhs, all[i].rhs, all[i].defect};
    }
  });
}

}  // extern "C"
