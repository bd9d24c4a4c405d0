#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pdstat/diagram.hpp"
#include "pdstat/selection.hpp"

namespace pdstat {

/// Mean minimizes F_2, median minimizes F_1.
enum class Statistic { Mean, Median };

Exponent exponent_of(Statistic stat);
/// Maps p = 2 to Mean and p = 1 to Median; anything else is rejected.
Statistic statistic_for(Exponent p);

/// A partition of all off-diagonal points of X_1..X_N into selections, each
/// drawing at most one point per diagram.
struct Matching {
  std::vector<Selection> selections;
};

struct CandidateResult {
  Diagram candidate;
  Matching matching;
  /// F_p(candidate), always recomputed from true d_p distances.
  double cost = 0.0;
  Exponent p{1.0};
};

struct TendencyReport {
  /// Distinct (in d_inf, up to the tolerance) candidates whose cost is within
  /// the tolerance of the best one, in canonical matching order.
  std::vector<CandidateResult> minima;
  bool unique = true;
  bool exhaustive = true;
  std::size_t matchings_enumerated = 0;
  std::size_t candidates_evaluated = 0;
  std::size_t iterations = 0;
  bool converged = true;
  /// Median of an even number of diagrams: midpoint convention in use.
  bool even_count = false;
  /// Medians only: every minimum has fewer than 2K off-diagonal points.
  std::optional<bool> point_bound_ok;
  /// Alternating means only: the optimal pairing from the result to each
  /// input is unique. Empty when it could not be enumerated.
  std::optional<bool> pairings_unique;
};

struct CenterOptions {
  double tolerance = 1e-9;
  std::size_t cap = 10;
  unsigned jobs = 1;
};

/// F_p(Y) = ((1/N) sum d_p(X_i, Y)^p)^(1/p); sup_i d_inf(Y, X_i) for p = inf.
double evaluate_cost(const Diagram& y, std::span<const Diagram> xs,
                     Exponent p);

/// Streams every matching exactly once. Selections appear in order of their
/// smallest member (points are ordered diagram-major). Throws SizeLimitError
/// if the total number of off-diagonal points exceeds `cap`.
void for_each_matching(std::span<const Diagram> xs, std::size_t cap,
                       const std::function<void(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(std::span<const Diagram> xs,
                                          std::size_t cap = 10);

/// The central point of every selection, diagonal results dropped.
Diagram candidate_of(const Matching& g, Statistic stat);

/// Evaluates the candidate of every matching and keeps the best ones. Every
/// local minimum of F_1 / F_2 is the candidate of some matching, so the
/// global minimum is among them.
TendencyReport exhaustive_center(std::span<const Diagram> xs, Statistic stat,
                                 const CenterOptions& options = {});

struct AlternatingOptions {
  std::size_t max_iter = 100;
  double tolerance = 1e-12;
};

struct AlternatingResult {
  CandidateResult result;
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<bool> pairings_unique;
};

/// Local search: pair the current diagram optimally with every input, group
/// the partners into selections, replace each point by its selection's
/// central point, repeat until F_p stops decreasing. Returns the best
/// diagram seen, which need not be the global minimum.
AlternatingResult alternating_center(std::span<const Diagram> xs,
                                     Statistic stat, const Diagram& start,
                                     const AlternatingOptions& options = {});

/// alternating_center from the first input, or from every input when
/// `all_starts` is set, packaged as a report.
TendencyReport alternating_report(std::span<const Diagram> xs, Statistic stat,
                                  bool all_starts,
                                  const AlternatingOptions& options = {},
                                  const CenterOptions& center = {});

/// |m| < 2K where K is the largest input size (m must be empty if K = 0).
bool median_point_bound(std::span<const Diagram> xs, const Diagram& m);

struct ProbeOptions {
  std::size_t samples = 200;
  double radius = 1e-3;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::size_t cap = 10;
  std::size_t combination_cap = 4096;
};

struct ConjectureReport {
  /// Under every combination of optimal pairings W -> X_i, each point of W
  /// is the median of its selection.
  bool hypothesis_holds = false;
  std::size_t pairing_combinations = 0;
  /// Some random small perturbation of W lowered F_1.
  bool improving_perturbation_found = false;
  double best_improvement = 0.0;
  std::size_t perturbations_tried = 0;
};

/// Diagnostic for the median sufficiency question: checks the hypothesis
/// and samples perturbations, asserting nothing.
ConjectureReport conjecture_probe(std::span<const Diagram> xs,
                                  const Diagram& w,
                                  const ProbeOptions& options = {});

}  // namespace pdstat
