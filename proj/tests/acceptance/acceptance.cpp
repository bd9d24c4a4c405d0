// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdstat/central.hpp"
#include "pdstat/geometry.hpp"
#include "pdstat/metric.hpp"
#include "pdstat/selection.hpp"

using namespace pdstat;

namespace {

constexpr double kTol = 1e-9;
constexpr double kCurvTol = 1e-12;
constexpr double kOracleTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Diagram> family(double z) {
  return {Diagram({{0, 2}, {3, 5}}), Diagram({{1, z}}), Diagram()};
}

bool contains(const TendencyReport& r, const Diagram& d, double tol) {
  return std::any_of(r.minima.begin(), r.minima.end(), [&](const CandidateResult& c) {
    return oracle::near_same(c.candidate, d, tol);
  });
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Outcome median_jump() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto low = exhaustive_center(family(3.5), Statistic::Median);
  o.require(low.unique && low.minima.size() == 1 && same_multiset(low.minima[0].candidate, Diagram({{1, 2}})),
            "z=3.5 unique median {(1,2)}");
  o.require(!low.minima.empty() && std::abs(low.minima[0].cost - 5.5 / 3) <= kTol, "z=3.5 F1=(z+2)/3");
  auto high = exhaustive_center(family(4.5), Statistic::Median);
  o.require(high.unique && high.minima.size() == 1 &&
                same_multiset(high.minima[0].candidate, Diagram({{3, 4.5}})),
            "z=4.5 unique median {(3,4.5)}");
  o.require(!high.minima.empty() && std::abs(high.minima[0].cost - 2) <= kTol, "z=4.5 F1=2");
  auto tie = exhaustive_center(family(4), Statistic::Median);
  o.require(!tie.unique && tie.minima.size() == 2 && contains(tie, Diagram({{1, 2}}), 0) &&
                contains(tie, Diagram({{3, 4}}), 0),
            "z=4 two medians");
  for (const auto& m : tie.minima) o.require(std::abs(m.cost - 2) <= kTol, "z=4 F1=2");
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime < 1 s");
  o.notes << " F1(3.5)=" << fmt(low.minima.empty() ? NAN : low.minima[0].cost) << " time=" << fmt(secs) << "s";
  return o;
}

Outcome mean_jump() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const double z = 3.5;
  auto low = exhaustive_center(family(z), Statistic::Mean);
  const Diagram low_expect({{(z + 7) / 12, (11 + 5 * z) / 12}, {11.0 / 3, 13.0 / 3}});
  o.require(low.minima.size() == 1 && oracle::near_same(low.minima[0].candidate, low_expect, kTol),
            "z=3.5 mean points");
  const double low_f2sq = low.minima.empty() ? NAN : low.minima[0].cost * low.minima[0].cost;
  const double low_formula = (8639 - 3995 * z + 1268 * z * z) / 6534;
  o.require(std::abs(low_f2sq - low_formula) <= kTol,
            "z=3.5 F2^2=" + fmt(low_f2sq) + " vs stated " + fmt(low_formula));

  const double w = 4.5;
  auto high = exhaustive_center(family(w), Statistic::Mean);
  const Diagram high_expect({{2.0 / 3, 4.0 / 3}, {(25 + w) / 12, (29 + 5 * w) / 12}});
  o.require(high.minima.size() == 1 && oracle::near_same(high.minima[0].candidate, high_expect, kTol),
            "z=4.5 mean points");
  const double high_f2sq = high.minima.empty() ? NAN : high.minima[0].cost * high.minima[0].cost;
  o.require(std::abs(high_f2sq - (191 - 58 * w + 7 * w * w) / 36) <= kTol, "z=4.5 F2^2");

  // Bisection on whether the matching that wins at z=3.5 still wins.
  auto signature = [](const TendencyReport& r) {
    std::vector<std::vector<Origin>> groups;
    for (const auto& s : r.minima.front().matching.selections) groups.push_back(s.origin);
    std::sort(groups.begin(), groups.end());
    return groups;
  };
  const auto low_sig = signature(low);
  double a = 3.5, b = 4.5;
  for (int i = 0; i < 60; ++i) {
    const double m = 0.5 * (a + b);
    auto r = exhaustive_center(family(m), Statistic::Mean);
    const bool same = signature(r) == low_sig;
    (same ? a : b) = m;
  }
  const double crossover = 0.5 * (a + b);
  o.require(crossover >= 3.9907 && crossover <= 3.9908,
            "crossover=" + fmt(crossover) + " outside [3.9907, 3.9908]");
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime < 1 s");
  o.notes << " time=" << fmt(secs) << "s";
  return o;
}

Outcome two_medians() {
  Outcome o;
  auto check = [&](double a1, double b1, double a2, double b2, double c1, double d1, double c2, double d2,
                   bool verbose) {
    std::vector<Diagram> xs{Diagram({{a1, b1}, {a2, b2}}), Diagram({{c1, d1}, {c2, d2}}), Diagram()};
    auto r = exhaustive_center(xs, Statistic::Median);
    bool ok = !r.unique && r.minima.size() == 2 &&
              contains(r, Diagram({{c2, b1}, {c1, b2}}), 0) && contains(r, Diagram({{c1, b1}, {c2, b2}}), 0) &&
              std::abs(r.minima[0].cost - r.minima[1].cost) <= kTol;
    if (verbose && r.minima.size() == 2) o.notes << " F1=" << fmt(r.minima[0].cost);
    return ok;
  };
  o.require(check(-0.5, 5.5, 0.5, 5, 2.5, 7.5, 3, 7, true), "base configuration");
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  int held = 0, tried = 0;
  while (tried < 100) {
    double a1 = -0.5 + u(rng), b1 = 5.5 + u(rng), a2 = 0.5 + u(rng), b2 = 5 + u(rng);
    double c1 = 2.5 + u(rng), d1 = 7.5 + u(rng), c2 = 3 + u(rng), d2 = 7 + u(rng);
    const bool order = std::max(a1, a2) < std::min(c1, c2) && std::max(c1, c2) <= std::min(b1, b2) &&
                       std::max(b1, b2) < std::min(d1, d2);
    if (!order) continue;
    ++tried;
    held += check(a1, b1, a2, b2, c1, d1, c2, d2, false);
  }
  o.require(held == tried, "perturbations " + std::to_string(held) + "/" + std::to_string(tried));
  o.notes << " perturbations=" << held << "/" << tried;
  return o;
}

Outcome curvature() {
  Outcome o;
  const Diagram x1({{1, 4}}), y1({{1, 6}}), z1({{0, 5}});
  const Diagram x2({{0, 4}}), y2({{2, 6}}), z2({{0, 6}});
  for (double p : {3.0, 4.0, 8.0}) {
    auto pr = alexandrov_probe(x1, y1, z1, 0.5, Exponent(p));
    o.require(std::abs(pr.lhs - 1) <= kCurvTol && std::abs(pr.rhs - (std::pow(2.0, 2 / p) - 1)) <= kCurvTol,
              "first triple p=" + fmt(p));
  }
  auto inf = alexandrov_probe(x1, y1, z1, 0.5, Exponent::infinity());
  o.require(std::abs(inf.lhs - 1) <= kCurvTol && std::abs(inf.rhs) <= kCurvTol, "first triple p=inf");
  for (double p : {1.0, 1.5}) {
    auto pr = alexandrov_probe(x2, y2, z2, 0.5, Exponent(p));
    o.require(std::abs(pr.lhs - std::pow(2.0, 2 / p)) <= kCurvTol &&
                  std::abs(pr.rhs - (4 - std::pow(2.0, 2 / p))) <= kCurvTol,
              "second triple p=" + fmt(p));
  }
  const double d1 = alexandrov_defect(x1, y1, z1, 0.5, Exponent(2));
  const double d2 = alexandrov_defect(x2, y2, z2, 0.5, Exponent(2));
  o.require(d1 >= -kCurvTol && d2 >= -kCurvTol, "p=2 defects nonnegative");
  o.notes << " p=2 defects " << fmt(d1) << ", " << fmt(d2);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> total(0, 6);
  int distance_mismatch = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = total(rng);
    std::uniform_int_distribution<int> split(0, n);
    const int k = split(rng);
    auto x = oracle::random_int_diagram(rng, k);
    auto y = oracle::random_int_diagram(rng, n - k);
    for (double p : {1.0, 2.0, 3.0, oracle::kInf}) {
      if (dp_distance(x, y, Exponent(p)).distance != oracle::brute_distance(x, y, p)) ++distance_mismatch;
    }
  }
  o.require(distance_mismatch == 0, std::to_string(distance_mismatch) + " distance mismatches");

  std::uniform_real_distribution<double> alt(-2, 12);
  int beaten = 0, off_oracle = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + 2 * (trial % 4);
    const std::size_t k = 1 + (trial / 4) % n;
    auto s = oracle::random_selection(rng, k, n);
    auto mean = selection_mean(s);
    auto med = selection_median(s).value;
    const double mean_cost = selection_cost(s, mean, Exponent(2));
    const double med_cost = selection_cost(s, med, Exponent(1));
    const double med_diag = oracle::selection_objective_diagonal(s, 1);
    auto d = oracle::descent_mean(s);
    if (std::abs(d.birth - mean->birth) > kOracleTol || std::abs(d.death - mean->death) > kOracleTol) ++off_oracle;
    if (med) {
      auto b = oracle::breakpoint_median_cost(s);
      if (!b || std::abs(*b - med_cost) > kOracleTol) ++off_oracle;
    } else {
      if (std::abs(med_cost - med_diag) > kOracleTol) ++off_oracle;
      if (auto b = oracle::breakpoint_median_cost(s); b && *b < med_cost - kOracleTol) ++off_oracle;
    }
    for (int i = 0; i < 10000; ++i) {
      PlanePoint q{alt(rng), alt(rng)};
      if (q.birth > q.death) std::swap(q.birth, q.death);
      if (!(q.birth < q.death)) continue;
      if (selection_cost(s, q, Exponent(2)) < mean_cost - 1e-12) ++beaten;
      if (selection_cost(s, q, Exponent(1)) < med_cost - 1e-12) ++beaten;
    }
  }
  o.require(beaten == 0, std::to_string(beaten) + " random centers beat a statistic");
  o.require(off_oracle == 0, std::to_string(off_oracle) + " oracle disagreements");
  o.notes << " distance mismatches=" << distance_mismatch << " beaten=" << beaten << " oracle misses=" << off_oracle;
  return o;
}

Outcome geodesics() {
  Outcome o;
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> size(0, 3);
  const std::vector<double> ts{0.25, 0.5, 0.75};
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto x = oracle::random_diagram(rng, size(rng));
    auto y = oracle::random_diagram(rng, size(rng));
    for (auto p : {Exponent(1), Exponent(2), Exponent(3), Exponent::infinity()}) {
      auto r = dp_distance(x, y, p);
      std::vector<Diagram> pts;
      for (double t : ts) pts.push_back(geodesic_point(x, y, r.pairing, t));
      for (std::size_t i = 0; i < ts.size(); ++i) {
        worst = std::max(worst, std::abs(dp_distance(x, pts[i], p).distance - ts[i] * r.distance));
        for (std::size_t j = 0; j < ts.size(); ++j) {
          worst = std::max(worst, std::abs(dp_distance(pts[i], pts[j], p).distance -
                                           std::abs(ts[j] - ts[i]) * r.distance));
        }
      }
    }
  }
  o.require(worst <= kTol, "max error " + fmt(worst));
  o.notes << " max error=" << fmt(worst);
  return o;
}

Outcome point_bound() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(0, 3);
  int violations = 0, runs = 0;
  while (runs < 200) {
    const std::size_t n = runs % 2 ? 3 : 5;
    std::vector<Diagram> xs;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(oracle::random_diagram(rng, size(rng)));
      total += xs.back().size();
    }
    if (total > 10) continue;
    ++runs;
    auto r = exhaustive_center(xs, Statistic::Median);
    for (const auto& m : r.minima) violations += !median_point_bound(xs, m.candidate);
  }
  o.require(violations == 0, std::to_string(violations) + " bound violations");
  std::vector<Diagram> lone{Diagram({{0, 4}}), Diagram(), Diagram()};
  auto med = exhaustive_center(lone, Statistic::Median);
  auto mean = exhaustive_center(lone, Statistic::Mean);
  o.require(med.minima.size() == 1 && med.minima[0].candidate.empty(), "lone point median empty");
  o.require(mean.minima.size() == 1 && mean.minima[0].candidate.size() == 1, "lone point mean has one point");
  o.notes << " runs=" << runs;
  return o;
}

Outcome square() {
  Outcome o;
  for (double scale : {1.0, 1e-3}) {
    auto s = cat_counterexample(scale);
    auto all = all_optimal_pairings(s.x, s.y, Exponent(2), 1e-9 * scale);
    o.require(all.size() == 2, "scale " + fmt(scale) + " pairings=" + std::to_string(all.size()));
    if (all.size() == 2) {
      auto m0 = geodesic_point(s.x, s.y, all[0], 0.5);
      auto m1 = geodesic_point(s.x, s.y, all[1], 0.5);
      const double gap = dp_distance(m0, m1, Exponent::infinity()).distance;
      o.require(gap > 0, "scale " + fmt(scale) + " midpoints coincide");
      o.notes << " gap(" << fmt(scale) << ")=" << fmt(gap);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"median discontinuity", median_jump},
      {"mean discontinuity", mean_jump},
      {"two-median witness", two_medians},
      {"curvature witnesses", curvature},
      {"oracle equivalence", oracle_equivalence},
      {"geodesic parametrization", geodesics},
      {"median point bound", point_bound},
      {"square non-uniqueness", square},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::printf("%s %zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.notes.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
