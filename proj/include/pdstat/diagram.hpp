#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdstat {

/// A birth/death pair strictly above the diagonal. Death may be +inf
/// (an essential class); birth is always finite.
struct PlanePoint {
  double birth = 0.0;
  double death = 0.0;

  bool is_essential() const noexcept { return std::isinf(death); }
  double persistence() const noexcept { return death - birth; }

  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

/// Throws InvariantError unless birth is finite and birth < death.
void validate_point(const PlanePoint& x);

/// The exponent p of the d_p family, p in [1, inf]. p = inf is a distinct
/// code path everywhere (min-max aggregation), never a large-p surrogate.
class Exponent {
 public:
  explicit Exponent(double value);

  static Exponent infinity() {
    return Exponent(std::numeric_limits<double>::infinity());
  }
  /// Accepts "1", "2", "inf" (or "infinity") and any decimal >= 1.
  static Exponent parse(std::string_view text);

  double value() const noexcept { return value_; }
  bool is_infinite() const noexcept { return std::isinf(value_); }

  /// |v|^p for finite p, with exact fast paths for p = 1 and p = 2.
  double power(double v) const noexcept;
  /// s^(1/p) for finite p.
  double root(double s) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double value_;
};

/// Finite multiset of off-diagonal points. Diagonal copies are implicit.
/// Point order is preserved as given; duplicates are distinct members.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<PlanePoint> points);

  std::span<const PlanePoint> points() const noexcept { return points_; }
  const PlanePoint& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  bool has_essential() const noexcept;
  /// Throws EssentialPointError if any point has death = inf.
  void require_finite() const;

  /// Copy with points sorted lexicographically; used for multiset comparison.
  Diagram sorted() const;

 private:
  std::vector<PlanePoint> points_;
};

/// Same multiset of points (exact comparison).
bool same_multiset(const Diagram& a, const Diagram& b);

/// The canonical nearest diagonal point ((b+d)/2, (b+d)/2). The midpoint is
/// optimal for every p, so it is used regardless of p.
PlanePoint diagonal_projection(const PlanePoint& x, Exponent p);

/// min over t of ||x - (t,t)||_p.
double dist_to_diagonal(const PlanePoint& x, Exponent p);

/// ||a - b||_p.
double point_distance(const PlanePoint& a, const PlanePoint& b, Exponent p);

/// Per-pair cost used by the assignment formulation: ||a-b||_p^p for finite
/// p, ||a-b||_inf for p = inf.
double point_cost(const PlanePoint& a, const PlanePoint& b, Exponent p);

/// dist_to_diagonal(x, p)^p for finite p, dist_to_diagonal(x, inf) otherwise.
double diagonal_cost(const PlanePoint& x, Exponent p);

// Text format: one "<birth> <death>" per line, '#' starts a comment, blank
// lines ignored, "inf" accepted for death.
Diagram read_diagram(std::istream& in);
Diagram parse_diagram(std::string_view text);
Diagram load_diagram(const std::string& path);

void write_diagram(const Diagram& d, std::ostream& out);
std::string format_diagram(const Diagram& d);
void save_diagram(const Diagram& d, const std::string& path);

/// Shortest decimal representation that reads back to the same double.
std::string format_real(double v);

}  // namespace pdstat
