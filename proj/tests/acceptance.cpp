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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pseudogeo/error.hpp"
#include "pseudogeo/fiber.hpp"
#include "pseudogeo/finsler.hpp"
#include "pseudogeo/geodesics.hpp"
#include "pseudogeo/omega.hpp"
#include "pseudogeo/scene_io.hpp"
#include "pseudogeo/tangent.hpp"

using namespace pseudogeo;

namespace {

constexpr double pi = omega::kPi;
const std::filesystem::path kData = PG_TEST_DATA;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent check that a raw charge is an odd multiple of 2pi.
bool euclidean_charge(double w) {
  return std::abs(std::remainder(w - 2 * pi, 4 * pi)) < 1e-9;
}

Outcome identity_criterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> sweep{0,      pi / 2,     pi,         2 * pi, 2.5 * pi,
                                  3 * pi, 3.5 * pi, 6 * pi, 8 * pi};
  const std::vector<double> grid{0.1, 1.7, 3.3, 4.9};
  int combos = 0;
  for (double a : sweep) {
    for (double b : sweep) {
      ++combos;
      const auto w = omega::reduce_omega(std::vector{a, b});
      bool fixes_all = true;
      for (double t1 : grid) {
        for (double t2 : grid) {
          const auto theta = omega::DirectionAngles::free(std::vector{t1, t2});
          const auto out = omega::transform_direction(theta, w);
          if (std::abs(out[0] - t1) > 1e-12 || std::abs(out[1] - t2) > 1e-12) {
            fixes_all = false;
          }
        }
      }
      const bool expect = euclidean_charge(a) && euclidean_charge(b);
      o.require(fixes_all == expect, "mismatch at omega = (" + std::to_string(a) +
                                         ", " + std::to_string(b) + ")");
      o.require(omega::is_identity_mapping(std::vector{a, b}) == expect,
                "is_identity_mapping disagrees");
    }
  }
  const double t = seconds_since(start);
  o.require(combos == 81, "expected 81 combinations");
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.ok) o.detail = "81 combos x 16 directions, " + std::to_string(t) + " s";
  return o;
}

Outcome tangent_criterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  long models = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      omega::PointClass pc;
      std::size_t s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool e = mask & (1u << i);
        s += e;
        pc.per_axis.push_back(e ? omega::PointTag::kEuclidean
                                : omega::PointTag::kElliptic);
      }
      const auto t = tangent::tangent_space(pc);
      const auto c = tangent::cotangent_space(pc);
      o.require(t.dimension() == 2 * n - s && c.dimension() == 2 * n - s,
                "dimension mismatch at n = " + std::to_string(n));
      const auto p = tangent::pairing_matrix(c, t);
      o.require(p.size() == 2 * n - s, "pairing matrix size");
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p[i].size(); ++j) {
          o.require(p[i][j] == (i == j ? 1 : 0), "pairing is not the identity");
        }
      }
      ++models;
    }
  }
  const double t = seconds_since(start);
  o.require(t < 5.0, "took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(models) + " subsets, " + std::to_string(t) + " s";
  return o;
}

Outcome fiber_criterion() {
  Outcome o;
  long validated = 0;
  long mismatches = 0;
  for (long dp = 2; dp <= 12; ++dp) {
    for (long dm = 1; dm < dp; ++dm) {
      if (dp % dm != 0) continue;
      for (long lambda = 0; lambda <= dp; ++lambda) {
        if ((lambda * dm) % dp != 0) continue;
        const auto v = fiber::validate_pfb({dp, dm, dp - dm, lambda});
        o.require(v.valid.has_value(), "admissible spec rejected");
        if (!v.valid) continue;
        ++validated;
        const long lambda_m = lambda * dm / dp;
        const long oracle = (2 * dp - lambda) - (2 * dm - lambda_m);
        const auto d = fiber::vertical_dimension(*v.valid);
        if (d.vertical != oracle) ++mismatches;
        o.require((d.vertical == dp - dm) == (lambda == dp),
                  "euclidean-point biconditional fails");
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.ok) o.detail = std::to_string(validated) + " specs, 0 mismatches";
  return o;
}

Outcome minkowski_criterion() {
  using namespace finsler;
  Outcome o;
  const auto e = check_minkowski_norm(euclidean_norm(4), default_sample_directions(4));
  o.require(e.passed, "euclidean norm fails");
  o.require(e.max_homogeneity_residual < 1e-9, "euclidean homogeneity residual");
  o.require(std::abs(e.min_eigenvalue - 1.0) < 1e-4, "euclidean min eigenvalue");

  const std::vector<Vector> minus_e1{{-1.0, 0.0}};
  const auto l = check_minkowski_norm(linear_functional(2, 1), minus_e1);
  o.require(!l.nonnegative, "linear functional passes nonnegativity");

  const auto dirs = default_sample_directions(3);
  o.require(check_minkowski_norm(quartic_mean_norm(3), dirs).passed,
            "quartic mean fails the Minkowski checks");
  o.require(!probe_riemann(quartic_mean_norm(3), dirs).y_independent,
            "quartic mean passes the Riemann probe");

  const ChartCover line{Box{{0}, {1}}, {Box{{-0.1}, {0.6}}, Box{{0.4}, {1.1}}}, {}};
  const auto pu = build_partition(line);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto w = pu.weights(std::vector{k / 999.0});
    worst = std::max(worst, std::abs(w[0] + w[1] - 1.0));
  }
  o.require(worst < 1e-9, "partition sum off by " + std::to_string(worst));

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2, 2);
  a(1, 1) = 4.0;
  const ChartCover plane{Box{{0, 0}, {1, 1}},
                         {Box{{-0.5, -0.5}, {0.7, 1.5}}, Box{{0.3, -0.5}, {1.5, 1.5}}},
                         {euclidean_norm(2), quadratic_norm(a)}};
  const auto pu2 = build_partition(plane);
  const auto f = assemble_norm(plane, pu2, std::vector{0.5, 0.5});
  o.require(check_minkowski_norm(f, default_sample_directions(2)).passed,
            "assembled two-chart norm fails");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "residual %.2g, min eig %.6f, partition error %.2g",
                  e.max_homogeneity_residual, e.min_eigenvalue, worst);
    o.detail = buf;
  }
  return o;
}

Outcome detection_criterion() {
  using geodesics::WitnessRule;
  Outcome o;
  for (const char* n : {"2d", "3d"}) {
    auto load = [&](const std::string& stem) {
      return io::load_scene(kData / "scenes" / (stem + "_" + n + ".json"));
    };
    auto has = [](const geodesics::DetectionReport& r, WitnessRule rule) {
      for (const auto& w : r.witnesses) {
        if (w.rule == rule) return true;
      }
      return false;
    };
    const auto mixed = geodesics::detect_smarandache(load("mixed").scene);
    o.require(mixed.denied && has(mixed, WitnessRule::kMixedEuclideanNonEuclidean),
              std::string("mixed scene ") + n);
    const auto two = geodesics::detect_smarandache(load("two_elliptic").scene);
    o.require(two.denied && has(two, WitnessRule::kTwoEllipticSameDirection),
              std::string("two-elliptic scene ") + n);
    const auto eu = geodesics::detect_smarandache(load("euclidean").scene);
    o.require(!eu.denied && eu.witnesses.empty() &&
                  eu.verdict == geodesics::Verdict::kEuclidean,
              std::string("all-euclidean scene ") + n);
  }
  if (o.ok) o.detail = "denied/denied/not denied in n = 2 and n = 3";
  return o;
}

Outcome ray_criterion() {
  Outcome o;
  const geodesics::Bounds box{{-5, -5}, {5, 5}};
  const double r2 = std::sqrt(0.5);

  const geodesics::Scene flat(
      2, {{{0, 0}, omega::reduce_omega(std::vector{2 * pi, 2 * pi})}}, 0.1, box);
  const auto t0 = geodesics::trace_ray(flat, std::vector{-3.0, -3.0},
                                       std::vector{r2, r2}, 8);
  o.require(t0.events.size() == 1 && t0.events[0].incoming == t0.events[0].outgoing,
            "euclidean charge deflects");

  const geodesics::Scene bend(
      2, {{{0, 0}, omega::reduce_omega(std::vector{pi, 2 * pi})}}, 0.1, box);
  const auto t1 = geodesics::trace_ray(bend, std::vector{-3.0, -3.0},
                                       std::vector{r2, r2}, 8);
  double deflection = 0.0;
  if (t1.events.size() == 1) {
    const auto& e = t1.events[0];
    deflection = omega::wrap(e.outgoing[0] - e.incoming[0], omega::kTwoPi);
  }
  o.require(std::abs(deflection - pi / 2) < 1e-12, "pi charge deflection");

  const auto doc = io::load_scene(kData / "scenes" / "deflection_2d.json");
  auto render = [&] {
    std::vector<geodesics::RayTrace> traces;
    for (const auto& r : doc.rays) {
      traces.push_back(geodesics::trace_ray(doc.scene, r.origin, r.direction, 64));
    }
    return std::pair{io::emit_csv(traces, 2), io::emit_svg(doc.scene, traces)};
  };
  const auto first = render();
  const auto second = render();
  o.require(first == second, "emitters are not deterministic");
  o.require(first.first == slurp(kData / "golden" / "deflection_2d.csv"),
            "CSV differs from golden file");
  o.require(first.second == slurp(kData / "golden" / "deflection_2d.svg"),
            "SVG differs from golden file");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "deflection error %.2g, golden CSV/SVG match",
                  std::abs(deflection - pi / 2));
    o.detail = buf;
  }
  return o;
}

Outcome kahler_criterion() {
  using namespace finsler;
  Outcome o;
  const Lattice grid{{-1, -1}, {1, 1}, 3};
  const auto flat = kahler_check(flat_metric(1), 1, grid);
  o.require(flat.symmetric_pd && flat.j_invariant && flat.kappa_antisymmetric &&
                flat.closed && flat.passed,
            "flat metric fails");
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(1, 1) = 2.0;
  const auto bad = kahler_check(constant_metric(g), 1, grid);
  o.require(!bad.j_invariant && !bad.passed, "diag(1, 2) passes J-invariance");
  o.require(bad.j_witness && bad.j_witness->first == 0 && bad.j_witness->second == 0,
            "witness is not (e1, e1)");
  o.require(bad.j_witness_rotated == 2.0 && bad.j_witness_plain == 1.0,
            "witness values");
  if (o.ok) o.detail = "flat passes; diag(1,2) witness (e1, e1): 2 != 1";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"identity mapping sweep", identity_criterion},
      {"tangent/cotangent dimensions", tangent_criterion},
      {"vertical dimension oracle", fiber_criterion},
      {"Minkowski norm checks", minkowski_criterion},
      {"parallel axiom detection", detection_criterion},
      {"ray tracing and golden files", ray_criterion},
      {"Kaehler checks", kahler_criterion},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("[%s] %d. %s: %s\n", o.ok ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
