#include "pdstat/selection.hpp"

#include <algorithm>
#include <set>

#include "pdstat/errors.hpp"

namespace pdstat {

void validate_selection(const Selection& s) {
  if (s.size() == 0) throw InvariantError("selection must be non-empty");
  if (s.origin.empty()) return;
  if (s.origin.size() != s.points.size()) {
    throw InvariantError("selection origin must be parallel to its points");
  }
  std::set<std::size_t> diagrams;
  for (const auto& o : s.origin) {
    if (!diagrams.insert(o.diagram).second) {
      throw InvariantError("selection draws two points from one diagram");
    }
  }
}

CentralPoint selection_mean(const Selection& s) {
  validate_selection(s);
  const std::size_t k = s.points.size();
  if (k == 0) return std::nullopt;
  const double n = static_cast<double>(s.size());
  double sum_birth = 0.0, sum_death = 0.0;
  for (const auto& x : s.points) {
    sum_birth += x.birth;
    sum_death += x.death;
  }
  const double kk = static_cast<double>(k);
  const double mean_birth = sum_birth / kk;
  const double mean_death = sum_death / kk;
  const double anchor = 0.5 * (mean_birth + mean_death);
  const double diag = static_cast<double>(s.diagonal_count);
  return PlanePoint{(kk * mean_birth + diag * anchor) / n,
                    (kk * mean_death + diag * anchor) / n};
}

namespace {

// Order statistic `rank` (0-based) of `values` padded with `pad` copies of a
// symbolic infinity: +inf sorts after everything, -inf before.
struct PaddedOrder {
  std::vector<double> values;  // sorted ascending
  std::size_t pad = 0;
  bool pad_is_negative = false;

  // nullopt means the symbolic infinity.
  std::optional<double> at(std::size_t rank) const {
    if (pad_is_negative) {
      if (rank < pad) return std::nullopt;
      return values[rank - pad];
    }
    if (rank < values.size()) return values[rank];
    return std::nullopt;
  }
};

}  // namespace

MedianResult selection_median(const Selection& s) {
  validate_selection(s);
  const std::size_t k = s.points.size();
  const std::size_t n = s.size();
  MedianResult out;
  out.even_count = n % 2 == 0;
  // k < N/2 forces the diagonal; so does k = N/2 for even N.
  if (2 * k <= n) return out;

  PaddedOrder births{{}, s.diagonal_count, false};
  PaddedOrder deaths{{}, s.diagonal_count, true};
  for (const auto& x : s.points) {
    births.values.push_back(x.birth);
    deaths.values.push_back(x.death);
  }
  std::sort(births.values.begin(), births.values.end());
  std::sort(deaths.values.begin(), deaths.values.end());

  // With k > N/2 every middle order statistic is finite.
  auto middle = [n](const PaddedOrder& order) {
    if (n % 2 == 1) return *order.at((n - 1) / 2);
    return 0.5 * (*order.at(n / 2 - 1) + *order.at(n / 2));
  };
  const double birth = middle(births);
  const double death = middle(deaths);
  if (birth < death) out.value = PlanePoint{birth, death};
  return out;
}

double selection_cost(const Selection& s, const CentralPoint& c, Exponent p) {
  auto combine = [&](double acc, double v) {
    return p.is_infinite() ? std::max(acc, v) : acc + v;
  };
  double acc = 0.0;
  if (!c) {
    for (const auto& x : s.points) acc = combine(acc, diagonal_cost(x, p));
    return acc;
  }
  for (const auto& x : s.points) acc = combine(acc, point_cost(*c, x, p));
  if (s.diagonal_count > 0) {
    const double d = diagonal_cost(*c, p);
    acc = p.is_infinite() ? std::max(acc, d)
                          : acc + static_cast<double>(s.diagonal_count) * d;
  }
  return acc;
}

}  // namespace pdstat
