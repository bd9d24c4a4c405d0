#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pdstat/pdstat.h"

namespace {

pdstat_diagram* parse(const char* text) {
  pdstat_diagram* d = nullptr;
  REQUIRE(pdstat_diagram_parse(text, &d) == PDSTAT_OK);
  return d;
}

}  // namespace

TEST_CASE("diagram handles") {
  const double b[] = {1, 3}, d[] = {4, 5};
  pdstat_diagram* x = nullptr;
  REQUIRE(pdstat_diagram_create(b, d, 2, &x) == PDSTAT_OK);
  CHECK(pdstat_diagram_size(x) == 2);
  double bb = 0, dd = 0;
  CHECK(pdstat_diagram_point(x, 1, &bb, &dd) == PDSTAT_OK);
  CHECK(bb == 3);
  CHECK(dd == 5);
  CHECK(pdstat_diagram_point(x, 2, &bb, &dd) == PDSTAT_ERR_INVALID_ARGUMENT);

  std::size_t needed = 0;
  CHECK(pdstat_diagram_format(x, nullptr, 0, &needed) == PDSTAT_OK);
  std::string buf(needed + 1, '\0');
  CHECK(pdstat_diagram_format(x, buf.data(), buf.size(), &needed) == PDSTAT_OK);
  buf.resize(needed);
  CHECK(buf == "1 4\n3 5\n");
  pdstat_diagram_free(x);
  pdstat_diagram_free(nullptr);
}

TEST_CASE("error codes and messages") {
  pdstat_diagram* d = nullptr;
  CHECK(pdstat_diagram_parse("2 1\n", &d) == PDSTAT_ERR_INVARIANT);
  CHECK(d == nullptr);
  CHECK(std::string(pdstat_last_error()).find("line 1") != std::string::npos);
  CHECK(pdstat_diagram_parse("1 x\n", &d) == PDSTAT_ERR_PARSE);
  CHECK(pdstat_diagram_load("/nonexistent.dgm", &d) == PDSTAT_ERR_IO);
  CHECK(pdstat_diagram_parse(nullptr, &d) == PDSTAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(pdstat_status_name(PDSTAT_ERR_SIZE_LIMIT)).size() > 0);
  CHECK(std::string(pdstat_version()).size() > 0);

  auto* e = parse("0 inf\n");
  auto* z = parse("");
  double dist = 0;
  CHECK(pdstat_distance(e, z, 2, &dist, nullptr) == PDSTAT_ERR_ESSENTIAL_POINT);
  CHECK(pdstat_distance(z, z, 0.5, &dist, nullptr) == PDSTAT_ERR_INVALID_ARGUMENT);
  pdstat_diagram_free(e);
  pdstat_diagram_free(z);
}

TEST_CASE("distance, pairing and geodesic") {
  auto* x = parse("1 4\n3 5\n");
  auto* y = parse("0 5\n2 3\n");
  double dist = 0;
  pdstat_pairing* g = nullptr;
  REQUIRE(pdstat_distance(x, y, 1, &dist, &g) == PDSTAT_OK);
  CHECK(dist == 5);
  CHECK(pdstat_pairing_cost(g) == 5);
  CHECK(pdstat_pairing_size(g) == 3);
  int64_t l = 0, r = 0;
  CHECK(pdstat_pairing_entry(g, 1, &l, &r) == PDSTAT_OK);
  CHECK(l == 1);
  CHECK(r == -1);
  pdstat_pairing_free(g);

  CHECK(pdstat_distance(x, y, INFINITY, &dist, nullptr) == PDSTAT_OK);
  CHECK(dist == 1);

  pdstat_diagram* mid = nullptr;
  REQUIRE(pdstat_geodesic(x, y, 0.5, 2, &mid) == PDSTAT_OK);
  CHECK(pdstat_diagram_size(mid) == 3);
  pdstat_diagram_free(mid);

  auto* a = parse("1 9\n2 8\n");
  auto* b = parse("2 9\n1 8\n");
  std::size_t count = 0;
  CHECK(pdstat_count_optimal_pairings(a, b, 2, 1e-9, 10, &count) == PDSTAT_OK);
  CHECK(count == 2);
  pdstat_diagram_free(a);
  pdstat_diagram_free(b);
  pdstat_diagram_free(x);
  pdstat_diagram_free(y);
}

TEST_CASE("medians through the C interface") {
  std::vector<pdstat_diagram*> xs{parse("0 2\n3 5\n"), parse("1 4\n"), parse("")};
  pdstat_center_options opt;
  pdstat_center_options_init(&opt);
  opt.p = 1;
  pdstat_report* r = nullptr;
  REQUIRE(pdstat_center(xs.data(), xs.size(), &opt, &r) == PDSTAT_OK);
  CHECK(pdstat_report_count(r) == 2);
  CHECK_FALSE(pdstat_report_unique(r));
  CHECK(pdstat_report_exhaustive(r));
  CHECK(pdstat_report_point_bound(r) == 1);
  CHECK(pdstat_report_matchings(r) == 3);
  pdstat_diagram* c = nullptr;
  double cost = 0;
  REQUIRE(pdstat_report_candidate(r, 0, &c, &cost) == PDSTAT_OK);
  CHECK(std::abs(cost - 2.0) < 1e-12);
  double again = 0;
  CHECK(pdstat_cost(c, xs.data(), xs.size(), 1, &again) == PDSTAT_OK);
  CHECK(again == cost);

  pdstat_probe_result probe{};
  CHECK(pdstat_conjecture_probe(xs.data(), xs.size(), c, 0, 50, 1e-9, 10, &probe) == PDSTAT_OK);
  CHECK(probe.perturbations_tried == 50);
  pdstat_diagram_free(c);
  pdstat_report_free(r);

  opt.p = 3;
  CHECK(pdstat_center(xs.data(), xs.size(), &opt, &r) == PDSTAT_ERR_INVALID_ARGUMENT);
  opt.p = 2;
  opt.method = PDSTAT_METHOD_ALTERNATING;
  opt.all_starts = 1;
  REQUIRE(pdstat_center(xs.data(), xs.size(), &opt, &r) == PDSTAT_OK);
  CHECK_FALSE(pdstat_report_exhaustive(r));
  CHECK(pdstat_report_count(r) == 1);
  CHECK(pdstat_report_iterations(r) >= 1);
  pdstat_report_free(r);
  for (auto* x : xs) pdstat_diagram_free(x);
}

TEST_CASE("size limit through the C interface") {
  std::string text;
  for (int i = 0; i < 6; ++i) text += std::to_string(i) + " " + std::to_string(i + 2) + "\n";
  std::vector<pdstat_diagram*> xs{parse(text.c_str()), parse(text.c_str())};
  pdstat_center_options opt;
  pdstat_center_options_init(&opt);
  pdstat_report* r = nullptr;
  CHECK(pdstat_center(xs.data(), xs.size(), &opt, &r) == PDSTAT_ERR_SIZE_LIMIT);
  for (auto* x : xs) pdstat_diagram_free(x);
}

TEST_CASE("curvature probes through the C interface") {
  auto* x = parse("1 4\n");
  auto* y = parse("1 6\n");
  auto* z = parse("0 5\n");
  std::size_t count = 0;
  CHECK(pdstat_alexandrov_probes(x, y, z, 0.5, 3, 1e-9, 10, nullptr, 0, &count) == PDSTAT_OK);
  REQUIRE(count == 1);
  pdstat_alexandrov probe{};
  CHECK(pdstat_alexandrov_probes(x, y, z, 0.5, 3, 1e-9, 10, &probe, 1, &count) == PDSTAT_OK);
  CHECK(std::abs(probe.lhs - 1.0) < 1e-12);
  CHECK(std::abs(probe.rhs - (std::pow(2.0, 2.0 / 3) - 1)) < 1e-12);
  pdstat_diagram_free(x);
  pdstat_diagram_free(y);
  pdstat_diagram_free(z);
}

TEST_CASE("save and load") {
  auto* x = parse("0.1 0.3\n1 2\n");
  const std::string path = "capi_roundtrip.dgm";
  REQUIRE(pdstat_diagram_save(x, path.c_str()) == PDSTAT_OK);
  pdstat_diagram* y = nullptr;
  REQUIRE(pdstat_diagram_load(path.c_str(), &y) == PDSTAT_OK);
  double b = 0, d = 0;
  pdstat_diagram_point(y, 0, &b, &d);
  CHECK(b == 0.1);
  CHECK(d == 0.3);
  std::remove(path.c_str());
  pdstat_diagram_free(x);
  pdstat_diagram_free(y);
}
