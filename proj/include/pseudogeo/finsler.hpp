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

// Minkowski-norm validation, partition-of-unity gluing of per-chart norms,
// Kaehler checks on R^{2n} and the resulting geometry classification.
//
// The fundamental tensor at y is the Hessian of E = F^2 / 2, estimated with
// central differences. All checks are sample based: smoothness off the
// origin is declared, never verified.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pseudogeo/geodesics.hpp"

namespace pseudogeo::finsler {

using Vector = std::vector<double>;

struct NormCandidate {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> evaluate;
  std::string label;

  double operator()(std::span<const double> v) const { return evaluate(v); }
};

/// F(v) = |v|.
NormCandidate euclidean_norm(std::size_t m);
/// F(v) = (sum v_i^4)^(1/4). Its fundamental tensor is degenerate on the
/// coordinate hyperplanes and varies with y everywhere else.
NormCandidate quartic_mean_norm(std::size_t m);
/// F(v) = sqrt(v^T A v). Throws kInvalidInput for a non-square or
/// non-symmetric A.
NormCandidate quadratic_norm(const Eigen::MatrixXd& a);
/// F(v) = v_axis (1-based). Not a norm; useful as a failing candidate.
NormCandidate linear_functional(std::size_t m, std::size_t axis);

struct FundamentalTensorSample {
  Vector y;
  Eigen::MatrixXd matrix;

  /// g_y(u, v) = u^T G v.
  double operator()(std::span<const double> u, std::span<const double> v) const;
};

inline constexpr double kDefaultStep = 1e-4;

/// Symmetrized central-difference Hessian of F^2 / 2 at y with step h|y|.
/// Throws kSingularity when |y| <= h and kDimension on a size mismatch.
FundamentalTensorSample fundamental_tensor(const NormCandidate& f,
                                           std::span<const double> y,
                                           double h = kDefaultStep);

/// Deterministic unit directions with every component at least 0.05 in
/// magnitude before normalization, so none lies on a coordinate hyperplane.
std::vector<Vector> default_sample_directions(std::size_t m,
                                              std::size_t count = 24);

struct MinkowskiOptions {
  /// Relative homogeneity tolerance and default sample tolerance.
  double tol = 1e-9;
  /// Lower bound on the smallest eigenvalue of g_y.
  double pd_tol = 1e-6;
  double step = kDefaultStep;
};

struct SampleFailure {
  std::size_t sample;
  std::string check;
  std::string detail;
};

struct MinkowskiReport {
  std::string label;
  std::size_t samples = 0;
  bool nonnegative = false;
  bool homogeneous = false;
  bool positive_definite = false;
  bool passed = false;
  /// max |F(lambda v) - lambda F(v)| over samples and lambda in {0.5, 2, 10}.
  double max_homogeneity_residual = 0.0;
  /// Smallest eigenvalue of g_y over all samples.
  double min_eigenvalue = 0.0;
  std::vector<SampleFailure> failures;
};

/// Throws kInvalidInput with no samples, a non-positive tolerance or a
/// sample of the wrong dimension. Evaluation failures are reported per
/// sample.
MinkowskiReport check_minkowski_norm(const NormCandidate& f,
                                     std::span<const Vector> sample_dirs,
                                     const MinkowskiOptions& options = {});

struct RiemannProbe {
  bool y_independent = false;
  /// Largest entrywise difference between g_y at any sample and at the first.
  double max_deviation = 0.0;
  double tol = 0.0;
};

/// A Minkowski norm comes from an inner product iff g_y does not depend on y.
RiemannProbe probe_riemann(const NormCandidate& f,
                           std::span<const Vector> sample_dirs,
                           double tol = 1e-4, double step = kDefaultStep);

// Partition of unity ------------------------------------------------------

struct Box {
  Vector lower;
  Vector upper;

  std::size_t dimension() const noexcept { return lower.size(); }
  bool contains(std::span<const double> p) const;
};

struct ChartCover {
  Box region;
  std::vector<Box> charts;
  /// One norm per chart; may be empty when only the partition is needed.
  std::vector<NormCandidate> norms;
};

/// Smooth weights subordinate to a set of charts.
///
/// Each chart carries the product of exp(-1/(1 - t^2)) bumps, t the
/// coordinate rescaled to (-1, 1) across the chart, and the weights are the
/// bumps divided by their pointwise sum. The sum is formed in log space so
/// points near a chart edge do not underflow.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(std::vector<Box> charts);

  std::size_t size() const noexcept { return charts_.size(); }
  std::span<const Box> charts() const noexcept { return charts_; }

  /// Weights h_alpha(p). Throws kCoverage when p lies in no chart interior.
  Vector weights(std::span<const double> p) const;

 private:
  std::vector<Box> charts_;
};

/// Validates the cover (boxes nonempty, dimensions agree) and checks on a
/// lattice over the region that every point lies inside some chart. Throws
/// kCoverage naming the first uncovered lattice point.
PartitionOfUnity build_partition(const ChartCover& cover);

/// F(p, v) = sum_alpha h_alpha(p) F^alpha(v). Throws kCoverage for an
/// uncovered p and kInvalidInput when the cover lacks a norm per chart.
NormCandidate assemble_norm(const ChartCover& cover,
                            const PartitionOfUnity& partition,
                            std::span<const double> p);

// Kaehler checks ----------------------------------------------------------

using MetricField = std::function<Eigen::MatrixXd(std::span<const double>)>;

/// Regular lattice over a box in R^{2n}; a single point per axis samples the
/// lower corner.
struct Lattice {
  Vector lower;
  Vector upper;
  std::size_t points_per_axis = 3;

  std::vector<Vector> points() const;
  /// Largest extent across axes, or 1 for a degenerate lattice.
  double scale() const;
};

/// Standard complex structure on R^{2n} with coordinates (x^1..x^n,
/// y^1..y^n): J e_{x_i} = e_{y_i}, J e_{y_i} = -e_{x_i}.
Eigen::MatrixXd almost_complex_structure(std::size_t n);

MetricField constant_metric(Eigen::MatrixXd g);
/// Identity metric on R^{2n}.
MetricField flat_metric(std::size_t n);
/// exp(phi) I with phi = sum p_k / 4. Hermitian; closed only for n = 1.
MetricField conformal_metric(std::size_t n);
/// Product of conformal planes, g = f_i(x_i, y_i) on the (x_i, y_i) block
/// with f_i = 1 + (x_i^2 + y_i^2) / 2. Always Kaehler.
MetricField product_metric(std::size_t n);

struct KahlerOptions {
  double tol = 1e-9;
  /// Closedness tolerance is this factor times the lattice scale.
  double closed_factor = 1e-6;
};

struct KahlerFailure {
  std::string check;
  Vector point;
  std::string detail;
};

struct KahlerReport {
  std::size_t complex_dimension = 0;
  std::size_t points = 0;
  bool symmetric_pd = true;
  bool j_invariant = true;
  bool kappa_antisymmetric = true;
  bool closed = true;
  bool passed = false;
  /// First basis pair (0-based) where g(JX, JY) != g(X, Y), with both values.
  std::optional<std::pair<std::size_t, std::size_t>> j_witness;
  double j_witness_rotated = 0.0;
  double j_witness_plain = 0.0;
  double max_dkappa = 0.0;
  double closed_tol = 0.0;
  std::vector<KahlerFailure> failures;
};

/// Checks, at every lattice point, that g is symmetric positive definite,
/// J-invariant, that kappa(X, Y) = g(X, JY) is antisymmetric, and that
/// d kappa vanishes by central differences. Throws kInvalidInput for an
/// empty lattice or a metric of the wrong size.
KahlerReport kahler_check(const MetricField& g, std::size_t n,
                          const Lattice& grid,
                          const KahlerOptions& options = {});

// Classification ---------------------------------------------------------

enum class GeometryKind {
  kSmarandachePseudoManifold,
  kFinsler,
  kRiemann,
  kKahler,
  kNotClassified,
};

std::string_view to_string(GeometryKind kind) noexcept;

struct GeometryClass {
  GeometryKind kind = GeometryKind::kNotClassified;
  bool all_points_euclidean = false;
  std::vector<std::string> evidence;
};

/// Smarandache if the detector denied the parallel axiom; otherwise the
/// finest of Finsler (norm checks pass), Riemann (g_y independent of y) and
/// Kaehler (kahler checks pass) supported by the evidence.
GeometryClass classify_geometry(const geodesics::DetectionReport& detection,
                                const MinkowskiReport& norm_report,
                                const RiemannProbe& riemann_probe,
                                const KahlerReport* kahler_report = nullptr);

}  // namespace pseudogeo::finsler
