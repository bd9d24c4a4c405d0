#pragma once

#include <cstddef>
#include <vector>

#include "pdstat/diagram.hpp"
#include "pdstat/metric.hpp"

namespace pdstat {

/// One evaluation of the nonnegative-curvature comparison inequality
///   d(Z, g(t))^2 >= t d(Z,Y)^2 + (1-t) d(Z,X)^2 - t(1-t) d(X,Y)^2
/// along the geodesic g from X to Y induced by `pairing`.
struct AlexandrovProbe {
  double t = 0.0;
  Exponent p{2.0};
  Pairing pairing;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs - rhs. Negative means the inequality fails at this probe.
  double defect = 0.0;
};

AlexandrovProbe alexandrov_probe(const Diagram& x, const Diagram& y,
                                 const Diagram& z, double t, Exponent p);

/// Defect along the geodesic from the optimal pairing chosen by dp_distance.
double alexandrov_defect(const Diagram& x, const Diagram& y, const Diagram& z,
                         double t, Exponent p);

/// One probe per optimal pairing of X and Y (each is a distinct geodesic).
std::vector<AlexandrovProbe> alexandrov_probes(const Diagram& x,
                                               const Diagram& y,
                                               const Diagram& z, double t,
                                               Exponent p,
                                               double tolerance = 1e-9,
                                               std::size_t cap = 10);

struct SquareWitness {
  Diagram x;
  Diagram y;
  /// Number of optimal pairings, i.e. distinct geodesics from x to y.
  std::size_t geodesics = 0;
  /// d_inf between the t = 1/2 points of the first two geodesics.
  double midpoint_gap = 0.0;
};

/// Two opposite corners of an axis-aligned square against the other two.
/// The horizontal and vertical matchings tie for every p, at every scale.
SquareWitness cat_counterexample(double scale, Exponent p = Exponent(2.0));

}  // namespace pdstat
