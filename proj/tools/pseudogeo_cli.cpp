// Copyright 2026 The pseudogeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pseudogeo command line. Links only the C interface.
//
// Exit codes: 0 success, 1 validation or check failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseudogeo/pseudogeo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ReportDeleter {
  void operator()(pg_report* r) const { pg_report_free(r); }
};
struct SceneDeleter {
  void operator()(pg_scene* s) const { pg_scene_free(s); }
};
struct TracesDeleter {
  void operator()(pg_traces* t) const { pg_traces_free(t); }
};
using ReportPtr = std::unique_ptr<pg_report, ReportDeleter>;
using ScenePtr = std::unique_ptr<pg_scene, SceneDeleter>;
using TracesPtr = std::unique_ptr<pg_traces, TracesDeleter>;

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(pg_status status) {
  if (status != PG_OK) {
    throw Failure(std::string(pg_status_name(status)) + ": " + pg_last_error());
  }
}

// Comma-separated angle list, each entry in any pg_parse_angle form.
std::vector<double> parse_angles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    double v = 0.0;
    check(pg_parse_angle(text.substr(pos, comma - pos).c_str(), &v));
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

ScenePtr load(const std::string& path) {
  pg_scene* s = nullptr;
  check(pg_scene_load_file(path.c_str(), &s));
  return ScenePtr(s);
}

int print(pg_report* raw, bool json) {
  ReportPtr report(raw);
  std::fputs(json ? pg_report_json(report.get()) : pg_report_text(report.get()),
             stdout);
  return pg_report_ok(report.get()) ? kExitOk : kExitFailure;
}

// PSEUDOGEO_TOL overrides the default check tolerance.
double default_tolerance() {
  if (const char* env = std::getenv("PSEUDOGEO_TOL")) {
    double v = 0.0;
    if (pg_parse_angle(env, &v) == PG_OK && v > 0.0) return v;
    std::fprintf(stderr, "warning: ignoring PSEUDOGEO_TOL='%s'\n", env);
  }
  return 0.0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-manifold geometry toolkit"};
  app.set_version_flag("--version", std::string(pg_version()));
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print reports as JSON");

  std::string scene_path;
  std::string csv_path;
  std::string svg_path;
  std::size_t max_events = 64;
  auto* trace = app.add_subcommand("trace", "Trace the rays of a scene file");
  trace->add_option("--scene", scene_path, "Scene JSON")->required();
  trace->add_option("--csv", csv_path, "Write the polylines as CSV");
  trace->add_option("--svg", svg_path, "Render a planar scene as SVG");
  trace->add_option("--max-events", max_events, "Events per ray")
      ->capture_default_str();

  std::string omega_text;
  auto* classify = app.add_subcommand("classify", "Classify a charged point");
  classify->add_option("--omega", omega_text, "Charges, e.g. \"pi,2pi\"")
      ->required();

  auto* detect =
      app.add_subcommand("detect", "Detect a Smarandachely denied axiom");
  detect->add_option("--scene", scene_path, "Scene JSON")->required();

  std::string smoothness = "inf";
  auto* structure = app.add_subcommand(
      "structure", "Check a differential Smarandache structure");
  structure->add_option("--scene", scene_path, "Scene JSON")->required();
  structure->add_option("--smoothness", smoothness, "Declared order r or inf")
      ->capture_default_str();

  std::size_t axis = 1;
  auto* parallels =
      app.add_subcommand("parallels", "Count locally parallel lines");
  parallels->add_option("--omega", omega_text, "Charges")->required();
  parallels->add_option("--axis", axis, "Line axis (1-based)")->required();

  std::size_t n = 2;
  std::vector<std::size_t> euclidean;
  auto* tangent = app.add_subcommand("tangent", "Tangent space at a point");
  auto* cotangent =
      app.add_subcommand("cotangent", "Cotangent space at a point");
  for (auto* sub : {tangent, cotangent}) {
    sub->add_option("--n", n, "Dimension")->required();
    sub->add_option("--euclidean", euclidean, "Euclidean axes (1-based)")
        ->delimiter(',');
  }

  long dim_p = 0;
  long dim_m = 0;
  long group_dim = 0;
  long lambda = 0;
  auto* fiber = app.add_subcommand("fiber", "Principal fiber bundle dimensions");
  fiber->add_option("--dim-p", dim_p, "Total space dimension")->required();
  fiber->add_option("--dim-m", dim_m, "Base dimension")->required();
  fiber->add_option("--group-dim", group_dim, "Group dimension")->required();
  fiber->add_option("--lambda", lambda, "Euclidean directions at p")
      ->required();

  std::string norm = "euclidean";
  std::size_t m = 2;
  std::optional<double> tol;
  auto* normcheck = app.add_subcommand("normcheck", "Validate a Minkowski norm");
  normcheck
      ->add_option("--norm", norm,
                   "euclidean | quartic-mean | linear[:axis] | quadratic:A")
      ->capture_default_str();
  normcheck->add_option("--dim", m, "Vector dimension")->capture_default_str();
  normcheck->add_option("--tol", tol, "Check tolerance");

  std::string metric;
  std::string field;
  std::size_t complex_n = 1;
  auto* kahler = app.add_subcommand("kahler", "Kaehler checks on R^{2n}");
  auto* metric_opt =
      kahler->add_option("--metric", metric, "Constant metric \"a,b;c,d\"");
  kahler->add_option("--field", field, "flat | conformal | product")
      ->excludes(metric_opt);
  kahler->add_option("--n", complex_n, "Complex dimension for --field")
      ->capture_default_str();
  kahler->add_option("--tol", tol, "Check tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    pg_report* report = nullptr;

    if (trace->parsed()) {
      auto scene = load(scene_path);
      pg_traces* raw = nullptr;
      check(pg_scene_trace(scene.get(), max_events, &raw));
      TracesPtr traces(raw);
      if (!csv_path.empty()) check(pg_traces_write_csv(traces.get(), csv_path.c_str()));
      if (!svg_path.empty()) {
        check(pg_scene_write_svg(scene.get(), traces.get(), svg_path.c_str()));
      }
      check(pg_traces_report(traces.get(), &report));
      return print(report, json);
    }
    if (classify->parsed()) {
      const auto w = parse_angles(omega_text);
      check(pg_classify_report(w.data(), w.size(), &report));
      return print(report, json);
    }
    if (detect->parsed()) {
      auto scene = load(scene_path);
      check(pg_detect_report(scene.get(), &report));
      return print(report, json);
    }
    if (structure->parsed()) {
      int order = 0;
      if (smoothness != "inf" && smoothness != "infinity") {
        try {
          order = std::stoi(smoothness);
        } catch (const std::exception&) {
          std::fprintf(stderr, "--smoothness must be an integer or inf\n");
          return kExitUsage;
        }
        if (order < 1) {
          std::fprintf(stderr, "--smoothness must be at least 1\n");
          return kExitUsage;
        }
      }
      auto scene = load(scene_path);
      check(pg_structure_report(scene.get(), order, &report));
      return print(report, json);
    }
    if (parallels->parsed()) {
      const auto w = parse_angles(omega_text);
      check(pg_parallels_report(w.data(), w.size(), axis, &report));
      return print(report, json);
    }
    if (tangent->parsed() || cotangent->parsed()) {
      check(pg_tangent_report(n, euclidean.data(), euclidean.size(),
                              cotangent->parsed() ? 1 : 0, &report));
      return print(report, json);
    }
    if (fiber->parsed()) {
      check(pg_fiber_report(dim_p, dim_m, group_dim, lambda, &report));
      return print(report, json);
    }
    if (normcheck->parsed()) {
      check(pg_normcheck_report(norm.c_str(), m, tol.value_or(default_tolerance()),
                                &report));
      return print(report, json);
    }
    if (kahler->parsed()) {
      if (metric.empty() && field.empty()) {
        std::fprintf(stderr, "kahler needs --metric or --field\n");
        return kExitUsage;
      }
      const std::string spec = metric.empty() ? field : metric;
      check(pg_kahler_report(spec.c_str(), complex_n,
                             tol.value_or(default_tolerance()), &report));
      return print(report, json);
    }
  } catch (const Failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
