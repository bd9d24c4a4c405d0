#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <vector>

namespace pdstat {

/// Square matrix of nonnegative costs; +inf marks a forbidden assignment.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t n, double fill = 0.0);
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t row, std::size_t col) {
    return entries_[row * n_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

inline constexpr double kForbidden = std::numeric_limits<double>::infinity();

/// perm[row] = assigned column.
struct Assignment {
  std::vector<std::size_t> perm;
  double total = 0.0;
};

/// Min-sum assignment (Hungarian method with row/column potentials).
/// Throws InfeasibleError if every permutation has infinite total.
Assignment solve_min_sum(const CostMatrix& c);

/// Min-max (bottleneck) assignment: binary search over the distinct finite
/// entries with a perfect-matching test on the thresholded bipartite graph.
Assignment solve_min_max(const CostMatrix& c);

enum class Objective { MinSum, MinMax };

/// Every permutation whose total is within `tolerance` of the optimum, in
/// lexicographic order of perm. Throws SizeLimitError if n exceeds `cap`.
std::vector<Assignment> all_optimal_assignments(const CostMatrix& c,
                                                Objective objective,
                                                double tolerance = 1e-9,
                                                std::size_t cap = 10);

}  // namespace pdstat
