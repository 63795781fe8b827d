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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pseudogeo/error.hpp"
#include "pseudogeo/finsler.hpp"

using namespace pseudogeo;
using namespace pseudogeo::finsler;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pseudogeo::Error");
  return ErrorCode::kInternal;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Hessian of (sum y_i^4)^(1/2) / 2, by hand:
// -2 S^(-3/2) y_i^3 y_j^3 + 3 S^(-1/2) y_i^2 delta_ij.
Eigen::MatrixXd quartic_hessian(const Vector& y) {
  double s = 0.0;
  for (double v : y) s += std::pow(v, 4);
  const auto m = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXd h(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      h(i, j) = -2.0 * std::pow(s, -1.5) * std::pow(y[i], 3) * std::pow(y[j], 3);
      if (i == j) h(i, j) += 3.0 * std::pow(s, -0.5) * y[i] * y[i];
    }
  }
  return h;
}

Eigen::MatrixXd diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

Eigen::MatrixXd random_spd(std::mt19937_64& rng, Eigen::Index m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd b(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) b(i, j) = u(rng);
  return b * b.transpose() + 0.5 * Eigen::MatrixXd::Identity(m, m);
}

geodesics::DetectionReport euclidean_detection() {
  geodesics::DetectionReport d;
  d.denied = false;
  d.verdict = geodesics::Verdict::kEuclidean;
  d.dimension = 2;
  return d;
}

Lattice unit_lattice(std::size_t n, std::size_t per_axis = 3) {
  return Lattice{Vector(2 * n, -1.0), Vector(2 * n, 1.0), per_axis};
}

}  // namespace

TEST_CASE("fundamental tensor against analytic Hessians") {
  SUBCASE("euclidean norm gives the identity") {
    const auto g = fundamental_tensor(euclidean_norm(2), std::vector{1.0, 0.0});
    CHECK(max_abs_diff(g.matrix, Eigen::MatrixXd::Identity(2, 2)) < 1e-6);
    CHECK(g(std::vector{1.0, 2.0}, std::vector{3.0, -1.0}) ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("quadratic forms give their matrix at every y") {
    const auto a = diag({1, 4});
    const auto f = quadratic_norm(a);
    for (const auto& y : default_sample_directions(2)) {
      CHECK(max_abs_diff(fundamental_tensor(f, y).matrix, a) < 1e-4);
    }
  }
  SUBCASE("quartic mean") {
    const auto f = quartic_mean_norm(3);
    for (const auto& y : default_sample_directions(3, 10)) {
      CHECK(max_abs_diff(fundamental_tensor(f, y).matrix, quartic_hessian(y)) < 1e-6);
    }
    // On a coordinate axis the tensor is diag(1, 0, 0): degenerate.
    const Vector e1{1.0, 0.0, 0.0};
    const auto g = fundamental_tensor(f, e1);
    CHECK(max_abs_diff(g.matrix, quartic_hessian(e1)) < 1e-6);
    CHECK(g.matrix(1, 1) == doctest::Approx(0.0).scale(1).epsilon(1e-6));
  }
  SUBCASE("origin and size errors") {
    CHECK(code_of([] { fundamental_tensor(euclidean_norm(2), std::vector{0.0, 0.0}); }) ==
          ErrorCode::kSingularity);
    CHECK(code_of([] {
            fundamental_tensor(euclidean_norm(2), std::vector{1.0, 0.0, 0.0});
          }) == ErrorCode::kDimension);
  }
}

TEST_CASE("default sample directions stay off the coordinate hyperplanes") {
  const auto dirs = default_sample_directions(4);
  CHECK(dirs.size() == 24);
  CHECK(dirs == default_sample_directions(4));
  for (const auto& d : dirs) {
    double norm2 = 0.0;
    for (double x : d) {
      norm2 += x * x;
      CHECK(std::abs(x) > 0.02);
    }
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("check_minkowski_norm examples") {
  SUBCASE("euclidean norm on R^4 passes") {
    const auto r = check_minkowski_norm(euclidean_norm(4), default_sample_directions(4));
    CHECK(r.passed);
    CHECK(r.max_homogeneity_residual < 1e-9);
    CHECK(std::abs(r.min_eigenvalue - 1.0) < 1e-4);
  }
  SUBCASE("a linear coordinate fails nonnegativity") {
    const std::vector<Vector> dirs{{1.0, 0.0}};
    const auto r = check_minkowski_norm(linear_functional(2, 1), dirs);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.nonnegative);
    const auto it = std::find_if(r.failures.begin(), r.failures.end(),
                                 [](auto& f) { return f.check == "nonnegativity"; });
    CHECK(it != r.failures.end());
  }
  SUBCASE("diag(1, 4) quadratic passes") {
    CHECK(check_minkowski_norm(quadratic_norm(diag({1, 4})),
                               default_sample_directions(2))
              .passed);
  }
  SUBCASE("quartic mean passes on generic directions") {
    CHECK(check_minkowski_norm(quartic_mean_norm(3), default_sample_directions(3))
              .passed);
  }
  SUBCASE("evaluation failures are per sample") {
    NormCandidate bad{2, [](std::span<const double>) { return std::nan(""); }, "nan"};
    const auto r = check_minkowski_norm(bad, default_sample_directions(2, 3));
    CHECK_FALSE(r.passed);
    CHECK(r.failures.size() >= 3);
  }
  SUBCASE("precondition errors") {
    CHECK(code_of([] { check_minkowski_norm(euclidean_norm(2), {}); }) ==
          ErrorCode::kInvalidInput);
    CHECK(code_of([] {
            check_minkowski_norm(euclidean_norm(2), default_sample_directions(2),
                                 {.tol = 0.0});
          }) == ErrorCode::kInvalidInput);
  }
  CHECK_THROWS_AS(quadratic_norm(Eigen::MatrixXd{{1, 2}, {0, 1}}), Error);
}

TEST_CASE("riemann probe separates quadratic from quartic norms") {
  CHECK(probe_riemann(euclidean_norm(3), default_sample_directions(3)).y_independent);
  CHECK(probe_riemann(quadratic_norm(diag({1, 4})), default_sample_directions(2))
            .y_independent);
  const auto q = probe_riemann(quartic_mean_norm(3), default_sample_directions(3));
  CHECK_FALSE(q.y_independent);
  CHECK(q.max_deviation > 0.1);
}

TEST_CASE("property: quadratic norms have y-independent tensors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = std::uniform_int_distribution<Eigen::Index>(2, 5)(rng);
    const auto a = random_spd(rng, m);
    const auto f = quadratic_norm(a);
    const auto dirs = default_sample_directions(static_cast<std::size_t>(m), 6);
    for (const auto& y : dirs) {
      CHECK(max_abs_diff(fundamental_tensor(f, y).matrix, a) < 1e-4);
    }
    const auto r = check_minkowski_norm(f, dirs);
    CHECK(r.passed);
    CHECK(r.max_homogeneity_residual < 1e-9 * 10 * 10);
  }
}

TEST_CASE("partition of unity examples") {
  SUBCASE("single chart is identically one") {
    const PartitionOfUnity pu({Box{{-1, -1}, {1, 1}}});
    for (double x : {-0.99, -0.5, 0.0, 0.7}) {
      const auto w = pu.weights(std::vector{x, 0.3});
      REQUIRE(w.size() == 1);
      CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("identical charts split evenly") {
    const PartitionOfUnity pu({Box{{0}, {1}}, Box{{0}, {1}}});
    const auto w = pu.weights(std::vector{0.3});
    CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("two offset intervals sum to one on a 1000-point grid") {
    const ChartCover cover{Box{{0}, {1}}, {Box{{-0.1}, {0.6}}, Box{{0.4}, {1.1}}}, {}};
    const auto pu = build_partition(cover);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double x = k / 999.0;
      const auto w = pu.weights(std::vector{x});
      worst = std::max(worst, std::abs(w[0] + w[1] - 1.0));
      for (double h : w) {
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
      }
      if (x >= 0.6) CHECK(w[0] == 0.0);
      if (x <= 0.4) CHECK(w[1] == 0.0);
    }
    CHECK(worst < 1e-9);
  }
  SUBCASE("gaps in the cover are reported") {
    const ChartCover cover{Box{{0}, {1}}, {Box{{-0.1}, {0.4}}, Box{{0.6}, {1.1}}}, {}};
    CHECK(code_of([&] { build_partition(cover); }) == ErrorCode::kCoverage);
    const PartitionOfUnity pu(cover.charts);
    CHECK(code_of([&] { pu.weights(std::vector{0.5}); }) == ErrorCode::kCoverage);
  }
  SUBCASE("points deep in an edge region do not underflow") {
    const PartitionOfUnity pu({Box{{0}, {1}}, Box{{0.999999}, {2}}});
    const auto w = pu.weights(std::vector{0.9999995});
    CHECK(w[0] + w[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("assemble_norm examples") {
  const Box region{{0, 0}, {1, 1}};
  const std::vector<Box> charts{Box{{-0.5, -0.5}, {1.5, 1.5}},
                                Box{{-0.5, -0.5}, {1.5, 1.5}}};
  SUBCASE("shared norm is reproduced") {
    const ChartCover cover{region, charts, {euclidean_norm(2), euclidean_norm(2)}};
    const auto pu = build_partition(cover);
    const auto f = assemble_norm(cover, pu, std::vector{0.2, 0.7});
    CHECK(f(std::vector{3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-14));
  }
  SUBCASE("I and diag(1, 4) at an even split") {
    const ChartCover cover{region, charts,
                           {quadratic_norm(Eigen::MatrixXd::Identity(2, 2)),
                            quadratic_norm(diag({1, 4}))}};
    const auto pu = build_partition(cover);
    const auto f = assemble_norm(cover, pu, std::vector{0.5, 0.5});
    const Vector v{0.6, -0.8};
    CHECK(f(v) == doctest::Approx(0.5 * 1.0 + 0.5 * std::sqrt(0.36 + 4 * 0.64))
                      .epsilon(1e-14));
    CHECK(check_minkowski_norm(f, default_sample_directions(2)).passed);
    CHECK(code_of([&] { assemble_norm(cover, pu, std::vector{3.0, 3.0}); }) ==
          ErrorCode::kCoverage);
  }
  SUBCASE("missing norms") {
    const ChartCover cover{region, charts, {euclidean_norm(2)}};
    const auto pu = build_partition(cover);
    CHECK(code_of([&] { assemble_norm(cover, pu, std::vector{0.5, 0.5}); }) ==
          ErrorCode::kInvalidInput);
  }
}

TEST_CASE("property: assembled Minkowski norms stay Minkowski") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Box region{{0, 0}, {1, 1}};
  const std::vector<Box> charts{Box{{-0.1, -0.1}, {0.6, 1.1}},
                                Box{{0.4, -0.1}, {1.1, 0.6}},
                                Box{{0.4, 0.4}, {1.1, 1.1}}};
  for (int trial = 0; trial < 30; ++trial) {
    const ChartCover cover{region, charts,
                           {quadratic_norm(random_spd(rng, 2)), quartic_mean_norm(2),
                            quadratic_norm(random_spd(rng, 2))}};
    const auto pu = build_partition(cover);
    const Vector p{u(rng), u(rng)};
    const auto f = assemble_norm(cover, pu, p);
    CHECK_MESSAGE(check_minkowski_norm(f, default_sample_directions(2)).passed,
                  "p = ", p[0], ", ", p[1]);
  }
}

TEST_CASE("kahler_check examples") {
  SUBCASE("flat metric passes") {
    const auto r = kahler_check(flat_metric(1), 1, unit_lattice(1));
    CHECK(r.passed);
    CHECK(r.points == 9);
    CHECK(r.max_dkappa == 0.0);
  }
  SUBCASE("diag(1, 2) fails J-invariance at (e1, e1)") {
    const auto r = kahler_check(constant_metric(diag({1, 2})), 1, unit_lattice(1));
    CHECK_FALSE(r.passed);
    CHECK(r.symmetric_pd);
    CHECK_FALSE(r.j_invariant);
    REQUIRE(r.j_witness);
    CHECK(*r.j_witness == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(r.j_witness_rotated == 2.0);
    CHECK(r.j_witness_plain == 1.0);
  }
  SUBCASE("non-PD metrics are reported with a location") {
    const auto r = kahler_check(constant_metric(diag({1, -1})), 1, unit_lattice(1));
    CHECK_FALSE(r.symmetric_pd);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().point.size() == 2);
  }
  SUBCASE("product metric is Kaehler") {
    CHECK(kahler_check(product_metric(2), 2, unit_lattice(2)).passed);
  }
  SUBCASE("conformal metric is closed only in complex dimension one") {
    CHECK(kahler_check(conformal_metric(1), 1, unit_lattice(1)).passed);
    const auto r = kahler_check(conformal_metric(2), 2, unit_lattice(2));
    CHECK(r.j_invariant);
    CHECK_FALSE(r.closed);
    CHECK(r.max_dkappa > r.closed_tol);
  }
  SUBCASE("precondition errors") {
    CHECK(code_of([] { kahler_check(flat_metric(1), 2, unit_lattice(2)); }) ==
          ErrorCode::kInvalidInput);
    CHECK(code_of([] {
            kahler_check(flat_metric(1), 1, Lattice{{0, 0}, {1, 1}, 0});
          }) == ErrorCode::kInvalidInput);
    CHECK(code_of([] {
            kahler_check(flat_metric(1), 1, Lattice{{}, {}, 3});
          }) == ErrorCode::kDimension);
  }
}

// Independent J-invariance oracle: in the (x, y) block layout, g is
// J-invariant iff g = [[A, B], [-B, A]].
TEST_CASE("property: constant metrics pass iff symmetric PD and J-invariant") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int passes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 2;
    Eigen::MatrixXd g;
    if (trial % 3 == 0) {
      g = random_spd(rng, 2 * n);
    } else {
      Eigen::MatrixXd a = random_spd(rng, n);
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
          b(i, j) = 0.2 * u(rng);
          b(j, i) = -b(i, j);
        }
      g.resize(2 * n, 2 * n);
      g << a, b, -b, a;
      if (trial % 3 == 2) g(0, 0) -= 10.0;  // break positivity
    }
    const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
    const bool spd = (g - g.transpose()).cwiseAbs().maxCoeff() < 1e-12 &&
                     Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym)
                             .eigenvalues()
                             .minCoeff() > 0.0;
    bool blocks = true;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        blocks &= std::abs(g(i, j) - g(n + i, n + j)) < 1e-12;
        blocks &= std::abs(g(i, n + j) + g(n + i, j)) < 1e-12;
      }
    const auto r = kahler_check(constant_metric(g), static_cast<std::size_t>(n),
                                unit_lattice(static_cast<std::size_t>(n), 2));
    CHECK(r.passed == (spd && blocks));
    passes += r.passed;
  }
  CHECK(passes > 20);
}

TEST_CASE("classify_geometry") {
  const auto dirs = default_sample_directions(2);
  const auto eucl = check_minkowski_norm(euclidean_norm(2), dirs);
  const auto eucl_probe = probe_riemann(euclidean_norm(2), dirs);

  SUBCASE("denied detection wins") {
    auto d = euclidean_detection();
    d.denied = true;
    d.verdict = geodesics::Verdict::kSmarandacheManifold;
    CHECK(classify_geometry(d, eucl, eucl_probe).kind ==
          GeometryKind::kSmarandachePseudoManifold);
  }
  SUBCASE("euclidean norm is Riemann") {
    const auto c = classify_geometry(euclidean_detection(), eucl, eucl_probe);
    CHECK(c.kind == GeometryKind::kRiemann);
    CHECK(c.all_points_euclidean);
  }
  SUBCASE("quartic mean is Finsler, not Riemann") {
    const auto q = quartic_mean_norm(2);
    const auto c = classify_geometry(euclidean_detection(), check_minkowski_norm(q, dirs),
                                     probe_riemann(q, dirs));
    CHECK(c.kind == GeometryKind::kFinsler);
  }
  SUBCASE("failing norm is not classified") {
    const auto l = linear_functional(2, 1);
    const auto c = classify_geometry(euclidean_detection(), check_minkowski_norm(l, dirs),
                                     probe_riemann(l, dirs));
    CHECK(c.kind == GeometryKind::kNotClassified);
  }
  SUBCASE("passing Kaehler checks refine Riemann") {
    const auto k = kahler_check(flat_metric(1), 1, unit_lattice(1));
    CHECK(classify_geometry(euclidean_detection(), eucl, eucl_probe, &k).kind ==
          GeometryKind::kKahler);
    const auto bad = kahler_check(constant_metric(diag({1, 2})), 1, unit_lattice(1));
    CHECK(classify_geometry(euclidean_detection(), eucl, eucl_probe, &bad).kind ==
          GeometryKind::kRiemann);
  }
}
