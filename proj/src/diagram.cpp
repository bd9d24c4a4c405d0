#include "pdstat/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pdstat/errors.hpp"

namespace pdstat {

void validate_point(const PlanePoint& x) {
  if (!std::isfinite(x.birth)) {
    throw InvariantError("birth must be finite");
  }
  if (std::isnan(x.death) || !(x.birth < x.death)) {
    throw InvariantError("point (" + format_real(x.birth) + ", " +
                         format_real(x.death) +
                         ") violates birth < death");
  }
}

Exponent::Exponent(double value) : value_(value) {
  if (!(value >= 1.0)) {
    throw InvalidArgumentError("exponent p must lie in [1, inf]");
  }
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") {
    return infinity();
  }
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgumentError("cannot parse exponent '" + std::string(text) +
                               "'");
  }
  return Exponent(v);
}

double Exponent::power(double v) const noexcept {
  v = std::abs(v);
  if (value_ == 1.0) return v;
  if (value_ == 2.0) return v * v;
  return std::pow(v, value_);
}

double Exponent::root(double s) const noexcept {
  if (value_ == 1.0) return s;
  if (value_ == 2.0) return std::sqrt(s);
  return std::pow(s, 1.0 / value_);
}

std::string Exponent::to_string() const {
  return is_infinite() ? std::string("inf") : format_real(value_);
}

Diagram::Diagram(std::vector<PlanePoint> points) : points_(std::move(points)) {
  for (const auto& x : points_) validate_point(x);
}

bool Diagram::has_essential() const noexcept {
  return std::any_of(points_.begin(), points_.end(),
                     [](const PlanePoint& x) { return x.is_essential(); });
}

void Diagram::require_finite() const {
  if (has_essential()) throw EssentialPointError();
}

Diagram Diagram::sorted() const {
  Diagram out = *this;
  std::sort(out.points_.begin(), out.points_.end());
  return out;
}

bool same_multiset(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size()) return false;
  const Diagram sa = a.sorted();
  const Diagram sb = b.sorted();
  return std::equal(sa.points().begin(), sa.points().end(),
                    sb.points().begin());
}

PlanePoint diagonal_projection(const PlanePoint& x, Exponent /*p*/) {
  if (x.is_essential()) throw EssentialPointError();
  const double mid = 0.5 * (x.birth + x.death);
  return {mid, mid};
}

double dist_to_diagonal(const PlanePoint& x, Exponent p) {
  if (x.is_essential()) throw EssentialPointError();
  const double half = 0.5 * (x.death - x.birth);
  if (p.is_infinite()) return half;
  if (p.value() == 1.0) return 2.0 * half;
  if (p.value() == 2.0) return half * std::sqrt(2.0);
  return half * std::pow(2.0, 1.0 / p.value());
}

double point_distance(const PlanePoint& a, const PlanePoint& b, Exponent p) {
  if (a.is_essential() || b.is_essential()) throw EssentialPointError();
  const double db = std::abs(a.birth - b.birth);
  const double dd = std::abs(a.death - b.death);
  if (p.is_infinite()) return std::max(db, dd);
  if (p.value() == 1.0) return db + dd;
  if (p.value() == 2.0) return std::hypot(db, dd);
  return p.root(p.power(db) + p.power(dd));
}

double point_cost(const PlanePoint& a, const PlanePoint& b, Exponent p) {
  if (a.is_essential() || b.is_essential()) throw EssentialPointError();
  const double db = a.birth - b.birth;
  const double dd = a.death - b.death;
  if (p.is_infinite()) return std::max(std::abs(db), std::abs(dd));
  return p.power(db) + p.power(dd);
}

double diagonal_cost(const PlanePoint& x, Exponent p) {
  if (x.is_essential()) throw EssentialPointError();
  const double half = 0.5 * (x.death - x.birth);
  if (p.is_infinite()) return half;
  return 2.0 * p.power(half);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "value out of range '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError(line, "not a number '" + std::string(token) + "'");
  }
  if (std::isnan(v)) throw ParseError(line, "NaN is not a coordinate");
  return v;
}

}  // namespace

Diagram read_diagram(std::istream& in) {
  std::vector<PlanePoint> points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!text.empty()) {
      const auto end = text.find_first_of(" \t\r\v\f");
      tokens.push_back(text.substr(0, end));
      if (end == std::string_view::npos) break;
      text = trim(text.substr(end));
    }
    if (tokens.size() != 2) {
      throw ParseError(line, "expected '<birth> <death>', got " +
                                 std::to_string(tokens.size()) + " fields");
    }
    PlanePoint x{parse_real(tokens[0], line), parse_real(tokens[1], line)};
    try {
      validate_point(x);
    } catch (const InvariantError& e) {
      throw InvariantError("line " + std::to_string(line) + ": " + e.what());
    }
    points.push_back(x);
  }
  return Diagram(std::move(points));
}

Diagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_diagram(in);
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return read_diagram(in);
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_diagram(const Diagram& d, std::ostream& out) {
  for (const auto& x : d.points()) {
    out << format_real(x.birth) << ' ' << format_real(x.death) << '\n';
  }
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  write_diagram(d, out);
  return out.str();
}

void save_diagram(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  write_diagram(d, out);
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace pdstat
