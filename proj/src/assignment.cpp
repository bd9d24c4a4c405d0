#include "pdstat/assignment.hpp"

#include <algorithm>
#include <cmath>

#include "pdstat/errors.hpp"

namespace pdstat {

CostMatrix::CostMatrix(std::size_t n, double fill)
    : n_(n), entries_(n * n, fill) {}

CostMatrix::CostMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw InvalidArgumentError("cost matrix must be square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

namespace {

void check_entries(const CostMatrix& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const double v = c(i, j);
      if (std::isnan(v) || v < 0.0) {
        throw InvalidArgumentError("cost entries must be nonnegative");
      }
    }
  }
}

// Kuhn's augmenting path search restricted to entries <= threshold.
class ThresholdMatcher {
 public:
  ThresholdMatcher(const CostMatrix& c, double threshold)
      : c_(c), threshold_(threshold), match_col_(c.size(), kNone) {}

  bool perfect() {
    const std::size_t n = c_.size();
    for (std::size_t row = 0; row < n; ++row) {
      visited_.assign(n, false);
      if (!augment(row)) return false;
    }
    return true;
  }

  std::vector<std::size_t> permutation() const {
    std::vector<std::size_t> perm(c_.size());
    for (std::size_t col = 0; col < c_.size(); ++col) {
      perm[match_col_[col]] = col;
    }
    return perm;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t row) {
    for (std::size_t col = 0; col < c_.size(); ++col) {
      if (visited_[col] || !(c_(row, col) <= threshold_)) continue;
      visited_[col] = true;
      if (match_col_[col] == kNone || augment(match_col_[col])) {
        match_col_[col] = row;
        return true;
      }
    }
    return false;
  }

  const CostMatrix& c_;
  double threshold_;
  std::vector<std::size_t> match_col_;
  std::vector<bool> visited_;
};

}  // namespace

Assignment solve_min_sum(const CostMatrix& c) {
  check_entries(c);
  const std::size_t n = c.size();
  if (n == 0) return {};

  constexpr double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is a virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    owner[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t row0 = owner[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double entry = c(row0 - 1, col - 1);
        if (std::isfinite(entry)) {
          const double reduced = entry - u[row0] - v[col];
          if (reduced < minv[col]) {
            minv[col] = reduced;
            way[col] = col0;
          }
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      // The visited rows only reach visited columns through finite entries,
      // so Hall's condition fails.
      if (!std::isfinite(delta)) throw InfeasibleError();
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[owner[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (owner[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      owner[col0] = owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment out;
  out.perm.assign(n, 0);
  for (std::size_t col = 1; col <= n; ++col) out.perm[owner[col] - 1] = col - 1;
  for (std::size_t row = 0; row < n; ++row) out.total += c(row, out.perm[row]);
  return out;
}

Assignment solve_min_max(const CostMatrix& c) {
  check_entries(c);
  const std::size_t n = c.size();
  if (n == 0) return {};

  std::vector<double> levels;
  levels.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::isfinite(c(i, j))) levels.push_back(c(i, j));
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty() || !ThresholdMatcher(c, levels.back()).perfect()) {
    throw InfeasibleError();
  }

  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (ThresholdMatcher(c, levels[mid]).perfect()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  ThresholdMatcher matcher(c, levels[lo]);
  matcher.perfect();
  Assignment out;
  out.perm = matcher.permutation();
  for (std::size_t row = 0; row < n; ++row) {
    out.total = std::max(out.total, c(row, out.perm[row]));
  }
  return out;
}

std::vector<Assignment> all_optimal_assignments(const CostMatrix& c,
                                                Objective objective,
                                                double tolerance,
                                                std::size_t cap) {
  const std::size_t n = c.size();
  if (n > cap) throw SizeLimitError(n, cap);
  if (n == 0) return {Assignment{}};
  const bool sum = objective == Objective::MinSum;
  const double best = sum ? solve_min_sum(c).total : solve_min_max(c).total;
  const double bound = best + tolerance;

  std::vector<Assignment> found;
  std::vector<std::size_t> perm(n);
  std::vector<bool> taken(n, false);
  // Depth-first over rows; partial totals are lower bounds since entries are
  // nonnegative.
  auto dfs = [&](auto&& self, std::size_t row, double partial) -> void {
    if (row == n) {
      found.push_back({perm, partial});
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (taken[col]) continue;
      const double next =
          sum ? partial + c(row, col) : std::max(partial, c(row, col));
      if (!(next <= bound)) continue;
      taken[col] = true;
      perm[row] = col;
      self(self, row + 1, next);
      taken[col] = false;
    }
  };
  dfs(dfs, 0, 0.0);
  return found;
}

}  // namespace pdstat
