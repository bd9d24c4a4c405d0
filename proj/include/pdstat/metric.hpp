#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdstat/diagram.hpp"

namespace pdstat {

/// One matched pair of a pairing between diagrams X and Y. Indices refer to
/// X.points() / Y.points(); an empty side is a copy of the diagonal.
/// Diagonal-diagonal pairs are never stored.
struct PairEntry {
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;

  friend auto operator<=>(const PairEntry&, const PairEntry&) = default;
};

/// A bijection between the points (plus diagonal copies) of two diagrams.
/// Every point of X appears exactly once on the left and every point of Y
/// exactly once on the right.
struct Pairing {
  std::vector<PairEntry> pairs;
  Exponent p{1.0};
  double cost = 0.0;
};

struct DistanceResult {
  double distance = 0.0;
  Pairing pairing;
};

/// Cost of a single pair in assignment units (see point_cost).
double pair_cost(const Diagram& x, const Diagram& y, const PairEntry& e,
                 Exponent p);

/// (sum of pair costs)^(1/p), or the max pair cost for p = inf.
double pairing_cost(const Diagram& x, const Diagram& y,
                    const std::vector<PairEntry>& pairs, Exponent p);

/// Throws InvariantError unless `pairs` is a valid pairing of x and y.
void validate_pairing(const Diagram& x, const Diagram& y,
                      const std::vector<PairEntry>& pairs);

/// Exact d_p(X, Y) with one optimal pairing, via the (n+m)x(n+m) assignment
/// problem (min-sum for finite p, min-max for p = inf).
DistanceResult dp_distance(const Diagram& x, const Diagram& y, Exponent p);

/// Every pairing whose cost is within `tolerance` of d_p(X, Y), with diagonal
/// copies treated as interchangeable. Throws SizeLimitError when
/// |X| + |Y| > cap.
std::vector<Pairing> all_optimal_pairings(const Diagram& x, const Diagram& y,
                                          Exponent p, double tolerance = 1e-9,
                                          std::size_t cap = 10);

/// The point X_t on the geodesic induced by `pairing`: matched points move
/// linearly, points matched to the diagonal move toward their projection.
/// Points that land on the diagonal are dropped.
Diagram geodesic_point(const Diagram& x, const Diagram& y,
                       const Pairing& pairing, double t);

/// Same, using the pairing returned by dp_distance.
Diagram geodesic_point(const Diagram& x, const Diagram& y, double t,
                       Exponent p);

enum class PairingRegion { PairPoints, PairDiagonal, Tie };

/// Whether two single-point diagrams are cheaper to match to each other or
/// both to the diagonal.
PairingRegion pairing_region(const PlanePoint& x, const PlanePoint& y,
                             Exponent p, double tolerance = 1e-12);

}  // namespace pdstat
