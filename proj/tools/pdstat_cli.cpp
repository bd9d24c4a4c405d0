// pdstat: command-line front end over the pdstat C API.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdstat/pdstat.h"

namespace {

using json = nlohmann::ordered_json;

struct DiagramDeleter {
  void operator()(pdstat_diagram* d) const { pdstat_diagram_free(d); }
};
struct PairingDeleter {
  void operator()(pdstat_pairing* p) const { pdstat_pairing_free(p); }
};
struct ReportDeleter {
  void operator()(pdstat_report* r) const { pdstat_report_free(r); }
};
using DiagramPtr = std::unique_ptr<pdstat_diagram, DiagramDeleter>;
using PairingPtr = std::unique_ptr<pdstat_pairing, PairingDeleter>;
using ReportPtr = std::unique_ptr<pdstat_report, ReportDeleter>;

// Carries a library status up to main() for the exit code.
struct Failure {
  pdstat_status status;
  std::string message;
};

void check(pdstat_status status) {
  if (status != PDSTAT_OK) throw Failure{status, pdstat_last_error()};
}

int exit_code(pdstat_status status) {
  switch (status) {
    case PDSTAT_OK: return 0;
    case PDSTAT_ERR_SIZE_LIMIT: return 2;
    case PDSTAT_ERR_PARSE:
    case PDSTAT_ERR_INVARIANT:
    case PDSTAT_ERR_IO: return 3;
    case PDSTAT_ERR_ESSENTIAL_POINT: return 4;
    default: return 1;
  }
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return INFINITY;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v >= 1.0)) {
    throw Failure{PDSTAT_ERR_INVALID_ARGUMENT,
                  "p must be 1, 2, inf or a number >= 1, got '" + text + "'"};
  }
  return v;
}

std::string exponent_label(double p) { return std::isinf(p) ? "inf" : fmt(p); }

DiagramPtr load(const std::string& path) {
  pdstat_diagram* d = nullptr;
  check(pdstat_diagram_load(path.c_str(), &d));
  return DiagramPtr(d);
}

std::vector<DiagramPtr> load_all(const std::vector<std::string>& paths) {
  std::vector<DiagramPtr> out;
  for (const auto& path : paths) out.push_back(load(path));
  return out;
}

std::vector<const pdstat_diagram*> raw(const std::vector<DiagramPtr>& ds) {
  std::vector<const pdstat_diagram*> out;
  for (const auto& d : ds) out.push_back(d.get());
  return out;
}

struct Point {
  double birth;
  double death;
};

std::vector<Point> points_of(const pdstat_diagram* d) {
  std::vector<Point> out(pdstat_diagram_size(d));
  for (std::size_t i = 0; i < out.size(); ++i) {
    check(pdstat_diagram_point(d, i, &out[i].birth, &out[i].death));
  }
  return out;
}

std::string point_text(const Point& x) {
  return "(" + fmt(x.birth) + ", " + fmt(x.death) + ")";
}

std::string diagram_text(const pdstat_diagram* d) {
  std::string out = "{";
  const auto pts = points_of(d);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += point_text(pts[i]);
  }
  return out + "}";
}

json diagram_json(const pdstat_diagram* d) {
  json out = json::array();
  for (const auto& x : points_of(d)) out.push_back({x.birth, x.death});
  return out;
}

std::string diagram_file_text(const pdstat_diagram* d) {
  std::size_t needed = 0;
  check(pdstat_diagram_format(d, nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  check(pdstat_diagram_format(d, text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

struct Common {
  std::string p = "2";
  double tolerance = 1e-9;
  std::size_t cap = 10;
  bool json = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_distance(const std::vector<std::string>& files, const Common& c) {
  const double p = parse_exponent(c.p);
  auto x = load(files[0]);
  auto y = load(files[1]);
  double distance = 0.0;
  pdstat_pairing* raw_pairing = nullptr;
  check(pdstat_distance(x.get(), y.get(), p, &distance, &raw_pairing));
  PairingPtr pairing(raw_pairing);
  const auto xs = points_of(x.get());
  const auto ys = points_of(y.get());

  json pairs = json::array();
  std::ostringstream text;
  text << "d_" << exponent_label(p) << " = " << fmt(distance) << '\n';
  for (std::size_t i = 0; i < pdstat_pairing_size(pairing.get()); ++i) {
    int64_t left = -1, right = -1;
    check(pdstat_pairing_entry(pairing.get(), i, &left, &right));
    const std::string l = left < 0 ? "diagonal" : point_text(xs[left]);
    const std::string r = right < 0 ? "diagonal" : point_text(ys[right]);
    text << "  " << l << " -> " << r << '\n';
    pairs.push_back({{"left", left < 0 ? json(nullptr) : json(left)},
                     {"right", right < 0 ? json(nullptr) : json(right)}});
  }
  if (c.json) {
    emit({{"p", exponent_label(p)}, {"distance", distance}, {"pairing", pairs}});
  } else {
    std::cout << text.str();
  }
  return 0;
}

int cmd_geodesic(const std::vector<std::string>& files, double t,
                 const std::string& output, const Common& c) {
  const double p = parse_exponent(c.p);
  auto x = load(files[0]);
  auto y = load(files[1]);
  pdstat_diagram* raw_out = nullptr;
  check(pdstat_geodesic(x.get(), y.get(), t, p, &raw_out));
  DiagramPtr g(raw_out);
  if (!output.empty()) check(pdstat_diagram_save(g.get(), output.c_str()));
  if (c.json) {
    emit({{"p", exponent_label(p)}, {"t", t}, {"diagram", diagram_json(g.get())}});
  } else if (output.empty()) {
    std::cout << diagram_file_text(g.get());
  }
  return 0;
}

struct CenterFlags {
  bool exhaustive = false;
  bool alternating = false;
  bool all_starts = false;
  std::size_t max_iter = 100;
  bool probe = false;
  std::size_t probe_samples = 200;
};

int cmd_center(bool median, const std::vector<std::string>& files,
               const CenterFlags& f, const Common& c) {
  auto inputs = load_all(files);
  auto xs = raw(inputs);
  pdstat_center_options options;
  pdstat_center_options_init(&options);
  options.p = median ? 1.0 : 2.0;
  options.method =
      f.alternating ? PDSTAT_METHOD_ALTERNATING : PDSTAT_METHOD_EXHAUSTIVE;
  options.tolerance = c.tolerance;
  options.cap = c.cap;
  options.all_starts = f.all_starts ? 1 : 0;
  options.max_iter = f.max_iter;
  options.jobs = c.jobs;
  pdstat_report* raw_report = nullptr;
  check(pdstat_center(xs.data(), xs.size(), &options, &raw_report));
  ReportPtr report(raw_report);
  const pdstat_report* r = report.get();

  const std::string cost_name = median ? "F1" : "F2";
  const bool exhaustive = pdstat_report_exhaustive(r) != 0;
  if (median && pdstat_report_even_count(r)) {
    std::cerr << "warning: even number of diagrams; medians use the "
                 "midpoint convention\n";
  }

  json minima = json::array();
  std::ostringstream text;
  text << (median ? "median" : "mean") << " of " << files.size()
       << " diagrams (" << (exhaustive ? "exhaustive" : "alternating") << ")\n";
  if (exhaustive) {
    text << "matchings: " << pdstat_report_matchings(r)
         << ", candidates: " << pdstat_report_candidates(r) << '\n';
  } else {
    text << "iterations: " << pdstat_report_iterations(r) << ", converged: "
         << (pdstat_report_converged(r) ? "yes" : "no") << '\n';
  }
  for (std::size_t i = 0; i < pdstat_report_count(r); ++i) {
    pdstat_diagram* raw_candidate = nullptr;
    double cost = 0.0;
    check(pdstat_report_candidate(r, i, &raw_candidate, &cost));
    DiagramPtr candidate(raw_candidate);
    text << "candidate " << i + 1 << ": " << diagram_text(candidate.get())
         << '\n'
         << "  " << cost_name << " = " << fmt(cost) << '\n';
    json entry = {{"diagram", diagram_json(candidate.get())}, {"cost", cost}};
    if (f.probe && median) {
      pdstat_probe_result probe{};
      check(pdstat_conjecture_probe(xs.data(), xs.size(), candidate.get(),
                                    c.seed, f.probe_samples, c.tolerance,
                                    c.cap, &probe));
      text << "  probe: hypothesis " << (probe.hypothesis_holds ? "holds" : "fails")
           << " over " << probe.pairing_combinations
           << " pairing combinations; improving perturbation "
           << (probe.improving_perturbation_found ? "found" : "not found")
           << " in " << probe.perturbations_tried << " samples\n";
      entry["probe"] = {
          {"hypothesis_holds", probe.hypothesis_holds != 0},
          {"pairing_combinations", probe.pairing_combinations},
          {"improving_perturbation_found",
           probe.improving_perturbation_found != 0},
          {"best_improvement", probe.best_improvement},
          {"perturbations_tried", probe.perturbations_tried}};
    }
    minima.push_back(std::move(entry));
  }
  const bool unique = pdstat_report_unique(r) != 0;
  text << "unique: " << (unique ? "yes" : "no")
       << (exhaustive ? "" : " (local search; not certified)") << '\n';

  json out = {{"statistic", median ? "median" : "mean"},
              {"method", exhaustive ? "exhaustive" : "alternating"},
              {"p", median ? 1 : 2},
              {"minima", minima},
              {"unique", unique}};
  if (exhaustive) {
    out["matchings"] = pdstat_report_matchings(r);
    out["candidates"] = pdstat_report_candidates(r);
  } else {
    out["iterations"] = pdstat_report_iterations(r);
    out["converged"] = pdstat_report_converged(r) != 0;
  }
  if (median) {
    const int bound = pdstat_report_point_bound(r);
    text << "point bound (< 2K off-diagonal points): "
         << (bound == 1 ? "holds" : "VIOLATED") << '\n';
    out["even_count"] = pdstat_report_even_count(r) != 0;
    out["point_bound"] = bound == 1;
    if (bound == 0) std::cerr << "error: median exceeds the 2K point bound\n";
  } else {
    const int pu = pdstat_report_pairings_unique(r);
    if (pu >= 0) {
      text << "optimal pairings unique at result: " << (pu ? "yes" : "no")
           << '\n';
      out["pairings_unique"] = pu == 1;
    }
  }
  if (c.json) {
    emit(out);
  } else {
    std::cout << text.str();
  }
  return median && pdstat_report_point_bound(r) == 0 ? 1 : 0;
}

int cmd_cost(const std::string& candidate_path,
             const std::vector<std::string>& files, const Common& c) {
  const double p = parse_exponent(c.p);
  auto candidate = load(candidate_path);
  auto inputs = load_all(files);
  auto xs = raw(inputs);
  double value = 0.0;
  check(pdstat_cost(candidate.get(), xs.data(), xs.size(), p, &value));
  if (c.json) {
    emit({{"p", exponent_label(p)}, {"cost", value}});
  } else {
    std::cout << "F_" << exponent_label(p) << " = " << fmt(value) << '\n';
  }
  return 0;
}

int cmd_curvature(const std::vector<std::string>& files, double t,
                  const Common& c) {
  const double p = parse_exponent(c.p);
  auto x = load(files[0]);
  auto y = load(files[1]);
  auto z = load(files[2]);
  size_t count = 0;
  check(pdstat_alexandrov_probes(x.get(), y.get(), z.get(), t, p, c.tolerance,
                                 c.cap, nullptr, 0, &count));
  std::vector<pdstat_alexandrov> probes(count);
  check(pdstat_alexandrov_probes(x.get(), y.get(), z.get(), t, p, c.tolerance,
                                 c.cap, probes.data(), probes.size(), &count));
  json list = json::array();
  std::ostringstream text;
  text << "p = " << exponent_label(p) << ", t = " << fmt(t) << ", geodesics: "
       << count << '\n';
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& pr = probes[i];
    const bool holds = pr.defect >= -c.tolerance;
    text << "geodesic " << i + 1 << ": lhs = " << fmt(pr.lhs)
         << ", rhs = " << fmt(pr.rhs) << ", defect = " << fmt(pr.defect)
         << " (" << (holds ? "inequality holds" : "inequality violated")
         << ")\n";
    list.push_back({{"lhs", pr.lhs},
                    {"rhs", pr.rhs},
                    {"defect", pr.defect},
                    {"holds", holds}});
  }
  if (c.json) {
    emit({{"p", exponent_label(p)}, {"t", t}, {"probes", list}});
  } else {
    std::cout << text.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances, geodesics, means and medians of persistence "
               "diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pdstat_version()));

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_p) {
    if (with_p) {
      sub->add_option("-p", common.p, "Exponent: 1, 2, inf or a number >= 1")
          ->capture_default_str();
    }
    sub->add_option("--tol", common.tolerance, "Tie tolerance")
        ->capture_default_str();
    sub->add_option("--cap", common.cap, "Enumeration cap on point counts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", common.json, "Emit JSON");
    sub->add_option("--seed", common.seed, "Seed for randomized checks")
        ->capture_default_str();
    sub->add_option("--jobs", common.jobs, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  std::vector<std::string> files;
  double t = 0.5;
  std::string output;
  std::string candidate;
  CenterFlags center;

  auto* distance = app.add_subcommand("distance", "d_p distance and an optimal pairing");
  distance->add_option("files", files, "Two diagram files")->required()->expected(2);
  add_common(distance, true);

  auto* geodesic = app.add_subcommand("geodesic", "Point X_t on a geodesic from X to Y");
  geodesic->add_option("files", files, "Two diagram files")->required()->expected(2);
  geodesic->add_option("-t", t, "Position in [0, 1]")->capture_default_str();
  geodesic->add_option("-o,--output", output, "Write the diagram to this file");
  add_common(geodesic, true);

  auto add_center = [&](CLI::App* sub) {
    sub->add_option("files", files, "Diagram files")->required()->expected(1, -1);
    auto* ex = sub->add_flag("--exhaustive", center.exhaustive,
                             "Enumerate every matching (default)");
    auto* alt = sub->add_flag("--alternating", center.alternating,
                              "Alternating local search");
    ex->excludes(alt);
    sub->add_flag("--all-starts", center.all_starts,
                  "Alternating: restart from every input, keep the best");
    sub->add_option("--max-iter", center.max_iter, "Alternating iteration limit")
        ->capture_default_str();
    add_common(sub, false);
  };
  auto* mean = app.add_subcommand("mean", "Frechet mean (minimizer of F2)");
  add_center(mean);
  auto* median = app.add_subcommand("median", "Median (minimizer of F1)");
  add_center(median);
  median->add_flag("--probe", center.probe,
                   "Run the local-minimum probe on every median");
  median->add_option("--probe-samples", center.probe_samples,
                     "Perturbations per probe")
      ->capture_default_str();

  auto* cost = app.add_subcommand("cost", "Evaluate F_p of a candidate");
  cost->add_option("candidate", candidate, "Candidate diagram")->required();
  cost->add_option("files", files, "Input diagrams")->required()->expected(1, -1);
  add_common(cost, true);

  auto* curvature = app.add_subcommand(
      "curvature-check", "Nonnegative-curvature comparison probe for X, Y, Z");
  curvature->alias("curvature");
  curvature->add_option("files", files, "Diagram files X Y Z")->required()->expected(3);
  curvature->add_option("-t", t, "Position in [0, 1]")->capture_default_str();
  add_common(curvature, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*distance) return cmd_distance(files, common);
    if (*geodesic) return cmd_geodesic(files, t, output, common);
    if (*mean) return cmd_center(false, files, center, common);
    if (*median) return cmd_center(true, files, center, common);
    if (*cost) return cmd_cost(candidate, files, common);
    if (*curvature) return cmd_curvature(files, t, common);
  } catch (const Failure& f) {
    std::cerr << "pdstat: " << pdstat_status_name(f.status) << ": "
              << f.message << '\n';
    return exit_code(f.status);
  }
  return 1;
}
