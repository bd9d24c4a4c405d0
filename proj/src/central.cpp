#include "pdstat/central.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "pdstat/errors.hpp"
#include "pdstat/metric.hpp"

namespace pdstat {

Exponent exponent_of(Statistic stat) {
  return Exponent(stat == Statistic::Mean ? 2.0 : 1.0);
}

Statistic statistic_for(Exponent p) {
  if (p.value() == 2.0) return Statistic::Mean;
  if (p.value() == 1.0) return Statistic::Median;
  throw InvalidArgumentError("central tendencies are defined for p = 1 or 2");
}

namespace {

void require_inputs(std::span<const Diagram> xs) {
  if (xs.empty()) throw InvalidArgumentError("need at least one diagram");
  for (const auto& x : xs) x.require_finite();
}

std::size_t total_points(std::span<const Diagram> xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n += x.size();
  return n;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> workers;
  const unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned w = 0; w < n; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

CentralPoint central_point(const Selection& s, Statistic stat) {
  return stat == Statistic::Mean ? selection_mean(s)
                                 : selection_median(s).value;
}

// Greedy de-duplication of equal-cost candidates by d_inf.
std::vector<CandidateResult> distinct_minima(
    std::vector<CandidateResult> results, double tolerance) {
  if (results.empty()) return results;
  double best = results.front().cost;
  for (const auto& r : results) best = std::min(best, r.cost);
  std::vector<CandidateResult> kept;
  for (auto& r : results) {
    if (!(r.cost <= best + tolerance)) continue;
    const bool seen = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      return dp_distance(k.candidate, r.candidate, Exponent::infinity())
                 .distance <= tolerance;
    });
    if (!seen) kept.push_back(std::move(r));
  }
  return kept;
}

}  // namespace

double evaluate_cost(const Diagram& y, std::span<const Diagram> xs,
                     Exponent p) {
  require_inputs(xs);
  y.require_finite();
  double acc = 0.0;
  for (const auto& x : xs) {
    const double d = dp_distance(x, y, p).distance;
    acc = p.is_infinite() ? std::max(acc, d) : acc + p.power(d);
  }
  if (p.is_infinite()) return acc;
  return p.root(acc / static_cast<double>(xs.size()));
}

void for_each_matching(std::span<const Diagram> xs, std::size_t cap,
                       const std::function<void(const Matching&)>& visit) {
  require_inputs(xs);
  const std::size_t total = total_points(xs);
  if (total > cap) throw SizeLimitError(total, cap);

  std::vector<Origin> members;
  members.reserve(total);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs[i].size(); ++j) members.push_back({i, j});
  }

  // Restricted-growth enumeration: each point opens a new block or joins an
  // earlier block holding no point of its diagram.
  std::vector<std::vector<std::size_t>> blocks;
  const std::size_t n = xs.size();

  auto emit = [&] {
    Matching g;
    g.selections.reserve(blocks.size());
    for (const auto& block : blocks) {
      Selection s;
      for (std::size_t id : block) {
        const Origin& o = members[id];
        s.points.push_back(xs[o.diagram][o.point]);
        s.origin.push_back(o);
      }
      s.diagonal_count = n - block.size();
      g.selections.push_back(std::move(s));
    }
    visit(g);
  };

  auto place = [&](auto&& self, std::size_t id) -> void {
    if (id == total) {
      emit();
      return;
    }
    const std::size_t diagram = members[id].diagram;
    const std::size_t open = blocks.size();
    for (std::size_t b = 0; b < open; ++b) {
      // Blocks are filled diagram-major, so checking the last member suffices.
      if (members[blocks[b].back()].diagram == diagram) continue;
      blocks[b].push_back(id);
      self(self, id + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({id});
    self(self, id + 1);
    blocks.pop_back();
  };
  place(place, 0);
}

std::vector<Matching> enumerate_matchings(std::span<const Diagram> xs,
                                          std::size_t cap) {
  std::vector<Matching> out;
  for_each_matching(xs, cap, [&](const Matching& g) { out.push_back(g); });
  return out;
}

Diagram candidate_of(const Matching& g, Statistic stat) {
  std::vector<PlanePoint> points;
  points.reserve(g.selections.size());
  for (const auto& s : g.selections) {
    if (auto c = central_point(s, stat)) points.push_back(*c);
  }
  return Diagram(std::move(points));
}

TendencyReport exhaustive_center(std::span<const Diagram> xs, Statistic stat,
                                 const CenterOptions& options) {
  require_inputs(xs);
  const Exponent p = exponent_of(stat);

  // Many matchings share a candidate; evaluate each distinct one once and
  // keep the first matching (in canonical order) that produced it.
  std::vector<CandidateResult> candidates;
  std::map<std::vector<PlanePoint>, std::size_t> index;
  std::size_t enumerated = 0;
  for_each_matching(xs, options.cap, [&](const Matching& g) {
    ++enumerated;
    Diagram c = candidate_of(g, stat);
    const Diagram key = c.sorted();
    std::vector<PlanePoint> key_points(key.points().begin(),
                                       key.points().end());
    if (index.emplace(std::move(key_points), candidates.size()).second) {
      candidates.push_back({std::move(c), g, 0.0, p});
    }
  });

  parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
    candidates[i].cost = evaluate_cost(candidates[i].candidate, xs, p);
  });

  TendencyReport report;
  report.matchings_enumerated = enumerated;
  report.candidates_evaluated = candidates.size();
  report.minima = distinct_minima(std::move(candidates), options.tolerance);
  report.unique = report.minima.size() == 1;
  if (stat == Statistic::Median) {
    report.even_count = xs.size() % 2 == 0;
    report.point_bound_ok = std::all_of(
        report.minima.begin(), report.minima.end(),
        [&](const auto& r) { return median_point_bound(xs, r.candidate); });
  }
  return report;
}

namespace {

// Groups the optimal partners of each point of y into selections. Points of
// an input left unmatched by y become singleton selections.
Matching induced_matching(std::span<const Diagram> xs, const Diagram& y,
                          const std::vector<Pairing>& pairings) {
  const std::size_t n = xs.size();
  std::vector<Selection> per_point(y.size());
  std::vector<Selection> singletons;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : pairings[i].pairs) {
      if (!e.right) continue;
      const Origin o{i, *e.right};
      Selection& s = e.left ? per_point[*e.left] : singletons.emplace_back();
      s.points.push_back(xs[i][*e.right]);
      s.origin.push_back(o);
    }
  }
  Matching g;
  for (auto* group : {&per_point, &singletons}) {
    for (auto& s : *group) {
      if (s.points.empty()) continue;
      s.diagonal_count = n - s.points.size();
      g.selections.push_back(std::move(s));
    }
  }
  std::sort(g.selections.begin(), g.selections.end(),
            [](const Selection& a, const Selection& b) {
              return a.origin.front() < b.origin.front();
            });
  return g;
}

std::optional<bool> pairings_unique_at(std::span<const Diagram> xs,
                                       const Diagram& y, Exponent p) {
  try {
    for (const auto& x : xs) {
      if (all_optimal_pairings(y, x, p).size() != 1) return false;
    }
    return true;
  } catch (const SizeLimitError&) {
    return std::nullopt;
  }
}

}  // namespace

AlternatingResult alternating_center(std::span<const Diagram> xs,
                                     Statistic stat, const Diagram& start,
                                     const AlternatingOptions& options) {
  require_inputs(xs);
  start.require_finite();
  const Exponent p = exponent_of(stat);

  AlternatingResult out;
  out.result = {start, {}, evaluate_cost(start, xs, p), p};
  Diagram current = start;
  double current_cost = out.result.cost;

  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    std::vector<Pairing> pairings;
    pairings.reserve(xs.size());
    for (const auto& x : xs) pairings.push_back(dp_distance(current, x, p).pairing);
    Matching g = induced_matching(xs, current, pairings);
    Diagram next = candidate_of(g, stat);
    const double next_cost = evaluate_cost(next, xs, p);
    out.iterations = iter;
    if (next_cost <= out.result.cost) {
      out.result = {next, std::move(g), next_cost, p};
    }
    if (current_cost - next_cost < options.tolerance) {
      out.converged = true;
      break;
    }
    current = std::move(next);
    current_cost = next_cost;
  }
  if (stat == Statistic::Mean) {
    out.pairings_unique = pairings_unique_at(xs, out.result.candidate, p);
  }
  return out;
}

TendencyReport alternating_report(std::span<const Diagram> xs, Statistic stat,
                                  bool all_starts,
                                  const AlternatingOptions& options,
                                  const CenterOptions& center) {
  require_inputs(xs);
  const std::size_t starts = all_starts ? xs.size() : 1;
  std::vector<AlternatingResult> runs(starts);
  parallel_for(starts, center.jobs, [&](std::size_t i) {
    runs[i] = alternating_center(xs, stat, xs[i], options);
  });

  TendencyReport report;
  report.exhaustive = false;
  std::vector<CandidateResult> results;
  for (auto& run : runs) {
    report.iterations += run.iterations;
    report.converged = report.converged && run.converged;
    results.push_back(std::move(run.result));
  }
  report.candidates_evaluated = results.size();
  report.minima = distinct_minima(std::move(results), center.tolerance);
  report.unique = report.minima.size() == 1;
  const Exponent p = exponent_of(stat);
  if (stat == Statistic::Median) {
    report.even_count = xs.size() % 2 == 0;
    report.point_bound_ok = std::all_of(
        report.minima.begin(), report.minima.end(),
        [&](const auto& r) { return median_point_bound(xs, r.candidate); });
  } else {
    report.pairings_unique =
        pairings_unique_at(xs, report.minima.front().candidate, p);
  }
  return report;
}

bool median_point_bound(std::span<const Diagram> xs, const Diagram& m) {
  std::size_t k = 0;
  for (const auto& x : xs) k = std::max(k, x.size());
  if (k == 0) return m.empty();
  return m.size() < 2 * k;
}

ConjectureReport conjecture_probe(std::span<const Diagram> xs,
                                  const Diagram& w,
                                  const ProbeOptions& options) {
  require_inputs(xs);
  w.require_finite();
  const Exponent p(1.0);
  const std::size_t n = xs.size();

  std::vector<std::vector<Pairing>> optimal;
  std::size_t combinations = 1;
  for (const auto& x : xs) {
    optimal.push_back(all_optimal_pairings(w, x, p, options.tolerance,
                                           options.cap));
    combinations *= optimal.back().size();
    if (combinations > options.combination_cap) {
      throw SizeLimitError(combinations, options.combination_cap);
    }
  }

  ConjectureReport report;
  report.pairing_combinations = combinations;
  report.hypothesis_holds = true;
  std::vector<std::size_t> choice(n, 0);
  for (std::size_t combo = 0; combo < combinations; ++combo) {
    std::size_t rest = combo;
    for (std::size_t i = 0; i < n; ++i) {
      choice[i] = rest % optimal[i].size();
      rest /= optimal[i].size();
    }
    std::vector<Selection> per_point(w.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : optimal[i][choice[i]].pairs) {
        if (e.left && e.right) per_point[*e.left].points.push_back(xs[i][*e.right]);
      }
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      Selection& s = per_point[j];
      s.diagonal_count = n - s.points.size();
      const CentralPoint m = selection_median(s).value;
      const bool same = m && std::abs(m->birth - w[j].birth) <= options.tolerance &&
                        std::abs(m->death - w[j].death) <= options.tolerance;
      if (!same) report.hypothesis_holds = false;
    }
  }

  const double base = evaluate_cost(w, xs, p);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> step(-options.radius, options.radius);
  std::bernoulli_distribution move_all(0.5);
  for (std::size_t s = 0; s < options.samples && !w.empty(); ++s) {
    std::vector<PlanePoint> moved(w.points().begin(), w.points().end());
    if (move_all(rng)) {
      for (auto& x : moved) {
        x.birth += step(rng);
        x.death += step(rng);
      }
    } else {
      auto& x = moved[std::uniform_int_distribution<std::size_t>(
          0, moved.size() - 1)(rng)];
      x.birth += step(rng);
      x.death += step(rng);
    }
    if (!std::all_of(moved.begin(), moved.end(),
                     [](const PlanePoint& x) { return x.birth < x.death; })) {
      continue;
    }
    ++report.perturbations_tried;
    const double improvement =
        base - evaluate_cost(Diagram(std::move(moved)), xs, p);
    report.best_improvement = std::max(report.best_improvement, improvement);
    if (improvement > options.tolerance) {
      report.improving_perturbation_found = true;
    }
  }
  return report;
}

}  // namespace pdstat
