#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdstat/diagram.hpp"

namespace pdstat {

/// Where a selected point came from: diagram index and point index.
struct Origin {
  std::size_t diagram = 0;
  std::size_t point = 0;

  friend auto operator<=>(const Origin&, const Origin&) = default;
};

/// One element from each of N diagrams: k plane points plus N - k diagonal
/// copies. `origin`, when non-empty, is parallel to `points`.
struct Selection {
  std::vector<PlanePoint> points;
  std::size_t diagonal_count = 0;
  std::vector<Origin> origin;

  std::size_t size() const noexcept { return points.size() + diagonal_count; }
};

/// Throws InvariantError for an empty selection, a bad origin list, or two
/// points drawn from the same diagram.
void validate_selection(const Selection& s);

/// A central point of a selection: a plane point, or nullopt for the
/// diagonal.
using CentralPoint = std::optional<PlanePoint>;

/// Unique minimizer over the open half-plane of the sum of squared distances
/// to the points and to the diagonal: the weighted average of the points'
/// centroid and its diagonal projection. Diagonal when k = 0.
CentralPoint selection_mean(const Selection& s);

struct MedianResult {
  CentralPoint value;
  /// N was even; the middle-interval midpoint was used per coordinate.
  bool even_count = false;
};

/// Coordinate-wise median with the diagonal copies counted as +inf births
/// and -inf deaths. Diagonal when k < N/2 or when that median falls on or
/// below the diagonal.
MedianResult selection_median(const Selection& s);

/// Sum over the selection of ||c - s_i||_p^p, with diagonal copies
/// contributing dist_to_diagonal(c)^p. For c = diagonal, the points'
/// diagonal costs. For p = inf the max replaces the sum.
double selection_cost(const Selection& s, const CentralPoint& c, Exponent p);

}  // namespace pdstat
