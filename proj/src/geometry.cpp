#include "pdstat/geometry.hpp"

#include "pdstat/errors.hpp"

namespace pdstat {

namespace {

AlexandrovProbe probe_along(const Diagram& x, const Diagram& y,
                            const Diagram& z, double t, const Pairing& xy) {
  const Exponent p = xy.p;
  const Diagram g = geodesic_point(x, y, xy, t);
  auto sq = [](double v) { return v * v; };
  AlexandrovProbe probe;
  probe.t = t;
  probe.p = p;
  probe.pairing = xy;
  probe.lhs = sq(dp_distance(z, g, p).distance);
  probe.rhs = t * sq(dp_distance(z, y, p).distance) +
              (1.0 - t) * sq(dp_distance(z, x, p).distance) -
              t * (1.0 - t) * sq(xy.cost);
  probe.defect = probe.lhs - probe.rhs;
  return probe;
}

}  // namespace

AlexandrovProbe alexandrov_probe(const Diagram& x, const Diagram& y,
                                 const Diagram& z, double t, Exponent p) {
  z.require_finite();
  return probe_along(x, y, z, t, dp_distance(x, y, p).pairing);
}

double alexandrov_defect(const Diagram& x, const Diagram& y, const Diagram& z,
                         double t, Exponent p) {
  return alexandrov_probe(x, y, z, t, p).defect;
}

std::vector<AlexandrovProbe> alexandrov_probes(const Diagram& x,
                                               const Diagram& y,
                                               const Diagram& z, double t,
                                               Exponent p, double tolerance,
                                               std::size_t cap) {
  z.require_finite();
  std::vector<AlexandrovProbe> out;
  for (const auto& pairing : all_optimal_pairings(x, y, p, tolerance, cap)) {
    out.push_back(probe_along(x, y, z, t, pairing));
  }
  return out;
}

SquareWitness cat_counterexample(double scale, Exponent p) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgumentError("scale must be positive");
  }
  SquareWitness w;
  w.x = Diagram({{1.0 * scale, 9.0 * scale}, {2.0 * scale, 8.0 * scale}});
  w.y = Diagram({{2.0 * scale, 9.0 * scale}, {1.0 * scale, 8.0 * scale}});
  // Tolerance relative to the square's side so the tie survives rounding at
  // any scale.
  const auto pairings = all_optimal_pairings(w.x, w.y, p, 1e-9 * scale);
  w.geodesics = pairings.size();
  if (pairings.size() >= 2) {
    const Diagram a = geodesic_point(w.x, w.y, pairings[0], 0.5);
    const Diagram b = geodesic_point(w.x, w.y, pairings[1], 0.5);
    w.midpoint_gap = dp_distance(a, b, Exponent::infinity()).distance;
  }
  return w;
}

}  // namespace pdstat
