#include "pdstat/metric.hpp"

#include <algorithm>
#include <cmath>

#include "pdstat/assignment.hpp"
#include "pdstat/errors.hpp"

namespace pdstat {

double pair_cost(const Diagram& x, const Diagram& y, const PairEntry& e,
                 Exponent p) {
  if (e.left && e.right) return point_cost(x[*e.left], y[*e.right], p);
  if (e.left) return diagonal_cost(x[*e.left], p);
  if (e.right) return diagonal_cost(y[*e.right], p);
  return 0.0;
}

double pairing_cost(const Diagram& x, const Diagram& y,
                    const std::vector<PairEntry>& pairs, Exponent p) {
  std::vector<double> terms;
  terms.reserve(pairs.size());
  for (const auto& e : pairs) terms.push_back(pair_cost(x, y, e, p));
  // Summing in sorted order makes the value independent of which side is X.
  std::sort(terms.begin(), terms.end());
  double acc = 0.0;
  for (double c : terms) acc = p.is_infinite() ? std::max(acc, c) : acc + c;
  return p.is_infinite() ? acc : p.root(acc);
}

void validate_pairing(const Diagram& x, const Diagram& y,
                      const std::vector<PairEntry>& pairs) {
  std::vector<int> seen_left(x.size(), 0), seen_right(y.size(), 0);
  for (const auto& e : pairs) {
    if (!e.left && !e.right) {
      throw InvariantError("pairing stores a diagonal-diagonal pair");
    }
    if (e.left) {
      if (*e.left >= x.size()) throw InvariantError("left index out of range");
      ++seen_left[*e.left];
    }
    if (e.right) {
      if (*e.right >= y.size()) {
        throw InvariantError("right index out of range");
      }
      ++seen_right[*e.right];
    }
  }
  auto once = [](int n) { return n == 1; };
  if (!std::all_of(seen_left.begin(), seen_left.end(), once) ||
      !std::all_of(seen_right.begin(), seen_right.end(), once)) {
    throw InvariantError("pairing is not a bijection");
  }
}

namespace {

// Entries ordered: X points by index, then diagonal-to-Y pairs by Y index.
std::vector<PairEntry> canonical(std::vector<PairEntry> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const PairEntry& a, const PairEntry& b) {
              if (a.left.has_value() != b.left.has_value()) {
                return a.left.has_value();
              }
              if (a.left) return *a.left < *b.left;
              return a.right < b.right;
            });
  return pairs;
}

}  // namespace

DistanceResult dp_distance(const Diagram& x, const Diagram& y, Exponent p) {
  x.require_finite();
  y.require_finite();
  const std::size_t n = x.size();
  const std::size_t m = y.size();

  // Rows: x_0..x_{n-1}, then m diagonal copies. Columns: y_0..y_{m-1}, then
  // n diagonal copies.
  CostMatrix c(n + m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double to_diag = diagonal_cost(x[i], p);
    for (std::size_t j = 0; j < m; ++j) c(i, j) = point_cost(x[i], y[j], p);
    for (std::size_t j = m; j < n + m; ++j) c(i, j) = to_diag;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double to_diag = diagonal_cost(y[j], p);
    for (std::size_t i = n; i < n + m; ++i) c(i, j) = to_diag;
  }

  const Assignment a = p.is_infinite() ? solve_min_max(c) : solve_min_sum(c);

  std::vector<PairEntry> pairs;
  pairs.reserve(n + m);
  for (std::size_t row = 0; row < n + m; ++row) {
    const std::size_t col = a.perm[row];
    PairEntry e;
    if (row < n) e.left = row;
    if (col < m) e.right = col;
    if (e.left || e.right) pairs.push_back(e);
  }
  DistanceResult out;
  out.pairing.pairs = canonical(std::move(pairs));
  out.pairing.p = p;
  out.pairing.cost = pairing_cost(x, y, out.pairing.pairs, p);
  out.distance = out.pairing.cost;
  return out;
}

std::vector<Pairing> all_optimal_pairings(const Diagram& x, const Diagram& y,
                                          Exponent p, double tolerance,
                                          std::size_t cap) {
  x.require_finite();
  y.require_finite();
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (n + m > cap) throw SizeLimitError(n + m, cap);

  const double best = dp_distance(x, y, p).distance;
  const double limit = best + tolerance;
  // Bound on the aggregated (pre-root) partial cost.
  const double bound = p.is_infinite() ? limit : p.power(limit);
  auto combine = [&](double acc, double c) {
    return p.is_infinite() ? std::max(acc, c) : acc + c;
  };

  std::vector<Pairing> found;
  std::vector<PairEntry> current;
  std::vector<bool> used(m, false);

  auto dfs = [&](auto&& self, std::size_t i, double partial) -> void {
    if (i == n) {
      double total = partial;
      std::vector<PairEntry> pairs = current;
      for (std::size_t j = 0; j < m; ++j) {
        if (used[j]) continue;
        total = combine(total, diagonal_cost(y[j], p));
        pairs.push_back({std::nullopt, j});
      }
      if (!(total <= bound)) return;
      const double cost = pairing_cost(x, y, pairs, p);
      if (!(cost <= limit)) return;
      found.push_back({canonical(std::move(pairs)), p, cost});
      return;
    }
    for (std::size_t j = 0; j <= m; ++j) {
      const bool to_diag = j == m;
      if (!to_diag && used[j]) continue;
      const double c =
          to_diag ? diagonal_cost(x[i], p) : point_cost(x[i], y[j], p);
      const double next = combine(partial, c);
      if (!(next <= bound)) continue;
      if (!to_diag) used[j] = true;
      current.push_back({i, to_diag ? std::nullopt : std::optional(j)});
      self(self, i + 1, next);
      current.pop_back();
      if (!to_diag) used[j] = false;
    }
  };
  dfs(dfs, 0, 0.0);
  return found;
}

Diagram geodesic_point(const Diagram& x, const Diagram& y,
                       const Pairing& pairing, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidArgumentError("geodesic parameter t must lie in [0, 1]");
  }
  x.require_finite();
  y.require_finite();
  validate_pairing(x, y, pairing.pairs);

  auto lerp = [t](const PlanePoint& a, const PlanePoint& b) {
    return PlanePoint{(1.0 - t) * a.birth + t * b.birth,
                      (1.0 - t) * a.death + t * b.death};
  };
  std::vector<PlanePoint> out;
  out.reserve(pairing.pairs.size());
  for (const auto& e : pairing.pairs) {
    PlanePoint z;
    if (e.left && e.right) {
      z = lerp(x[*e.left], y[*e.right]);
    } else if (e.left) {
      const PlanePoint& a = x[*e.left];
      z = lerp(a, diagonal_projection(a, pairing.p));
    } else {
      const PlanePoint& b = y[*e.right];
      z = lerp(diagonal_projection(b, pairing.p), b);
    }
    if (z.birth < z.death) out.push_back(z);
  }
  return Diagram(std::move(out));
}

Diagram geodesic_point(const Diagram& x, const Diagram& y, double t,
                       Exponent p) {
  return geodesic_point(x, y, dp_distance(x, y, p).pairing, t);
}

PairingRegion pairing_region(const PlanePoint& x, const PlanePoint& y,
                             Exponent p, double tolerance) {
  const double together = point_cost(x, y, p);
  const double apart =
      p.is_infinite() ? std::max(diagonal_cost(x, p), diagonal_cost(y, p))
                      : diagonal_cost(x, p) + diagonal_cost(y, p);
  if (std::abs(together - apart) <= tolerance) return PairingRegion::Tie;
  return together < apart ? PairingRegion::PairPoints
                          : PairingRegion::PairDiagonal;
}

}  // namespace pdstat
