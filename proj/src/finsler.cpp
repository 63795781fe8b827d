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

#include "pseudogeo/finsler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pseudogeo/error.hpp"

namespace pseudogeo::finsler {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<Eigen::Index>(v.size()));
}

// F evaluated with exceptions and non-finite results folded into NaN.
double safe_eval(const NormCandidate& f, std::span<const double> v) {
  try {
    const double r = f(v);
    return std::isfinite(r) ? r : std::numeric_limits<double>::quiet_NaN();
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

double energy(const NormCandidate& f, std::span<const double> v) {
  const double r = f(v);
  return 0.5 * r * r;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return solver.eigenvalues().minCoeff();
}

void require_dimension(const NormCandidate& f, std::span<const double> v) {
  if (v.size() != f.dimension) {
    throw Error(ErrorCode::kDimension,
                fmt::format("{} expects {}-vectors, got {}", f.label,
                            f.dimension, v.size()));
  }
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

NormCandidate euclidean_norm(std::size_t m) {
  return {m, [](std::span<const double> v) { return norm2(v); },
          "euclidean"};
}

NormCandidate quartic_mean_norm(std::size_t m) {
  return {m,
          [](std::span<const double> v) {
            double s = 0.0;
            for (double x : v) s += x * x * x * x;
            return std::sqrt(std::sqrt(s));
          },
          "quartic-mean"};
}

NormCandidate quadratic_norm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("quadratic form must be square, got {}x{}",
                            a.rows(), a.cols()));
  }
  if (!a.allFinite() || (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw Error(ErrorCode::kInvalidInput,
                "quadratic form must be finite and symmetric");
  }
  const auto m = static_cast<std::size_t>(a.rows());
  return {m,
          [a](std::span<const double> v) {
            const Eigen::VectorXd x = to_eigen(v);
            return std::sqrt(x.dot(a * x));
          },
          "quadratic"};
}

NormCandidate linear_functional(std::size_t m, std::size_t axis) {
  if (axis < 1 || axis > m) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("axis {} is outside 1..{}", axis, m));
  }
  return {m, [axis](std::span<const double> v) { return v[axis - 1]; },
          fmt::format("linear:{}", axis)};
}

double FundamentalTensorSample::operator()(std::span<const double> u,
                                           std::span<const double> v) const {
  return to_eigen(u).dot(matrix * to_eigen(v));
}

FundamentalTensorSample fundamental_tensor(const NormCandidate& f,
                                           std::span<const double> y,
                                           double h) {
  require_dimension(f, y);
  if (!(h > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "step must be positive");
  }
  const double len = norm2(y);
  if (len <= h) {
    throw Error(ErrorCode::kSingularity,
                "fundamental tensor is undefined at the origin (|y| <= h)");
  }
  const double s = h * len;
  const std::size_t m = y.size();

  Vector p(y.begin(), y.end());
  auto e_at = [&](std::size_t i, double di, std::size_t j, double dj) {
    p[i] += di;
    p[j] += dj;
    const double e = energy(f, p);
    p[i] -= di;
    p[j] -= dj;
    return e;
  };

  const double e0 = energy(f, y);
  Eigen::MatrixXd g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const double ep = e_at(i, s, i, 0.0);
    const double em = e_at(i, -s, i, 0.0);
    g(i, i) = (ep - 2.0 * e0 + em) / (s * s);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double epp = e_at(i, s, j, s);
      const double epm = e_at(i, s, j, -s);
      const double emp = e_at(i, -s, j, s);
      const double emm = e_at(i, -s, j, -s);
      g(i, j) = g(j, i) = (epp - epm - emp + emm) / (4.0 * s * s);
    }
  }
  if (!g.allFinite()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("{} is not finite near y", f.label));
  }
  return {Vector(y.begin(), y.end()), 0.5 * (g + g.transpose())};
}

std::vector<Vector> default_sample_directions(std::size_t m,
                                              std::size_t count) {
  std::mt19937_64 rng(0x5eedf00dULL);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector v(m);
    for (double& x : v) {
      const double mag = 0.05 + 0.95 * unit_uniform(rng);
      x = (rng() & 1U) ? mag : -mag;
    }
    const double len = norm2(v);
    for (double& x : v) x /= len;
    out.push_back(std::move(v));
  }
  return out;
}

MinkowskiReport check_minkowski_norm(const NormCandidate& f,
                                     std::span<const Vector> sample_dirs,
                                     const MinkowskiOptions& options) {
  if (sample_dirs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "at least one sample direction");
  }
  if (!(options.tol > 0.0) || !(options.pd_tol > 0.0) ||
      !(options.step > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "tolerances must be positive");
  }
  for (const auto& v : sample_dirs) require_dimension(f, v);

  MinkowskiReport report;
  report.label = f.label;
  report.samples = sample_dirs.size();
  report.nonnegative = report.homogeneous = report.positive_definite = true;
  report.min_eigenvalue = kInf;

  static constexpr double kScales[] = {0.5, 2.0, 10.0};

  for (std::size_t k = 0; k < sample_dirs.size(); ++k) {
    const Vector& v = sample_dirs[k];
    const double fv = safe_eval(f, v);
    if (std::isnan(fv)) {
      report.failures.push_back({k, "evaluation", "F(v) is not finite"});
      report.nonnegative = report.homogeneous = report.positive_definite =
          false;
      continue;
    }

    Vector neg(v);
    for (double& x : neg) x = -x;
    const std::pair<const Vector*, double> probes[] = {
        {&v, fv}, {&neg, safe_eval(f, neg)}};
    for (const auto& [probe, value] : probes) {
      if (!(value >= 0.0)) {
        report.nonnegative = false;
        report.failures.push_back(
            {k, "nonnegativity",
             fmt::format("F({:.6g}) = {:.6g}", fmt::join(*probe, ", "),
                         value)});
      }
    }

    for (double lambda : kScales) {
      Vector scaled(v);
      for (double& x : scaled) x *= lambda;
      const double fs = safe_eval(f, scaled);
      const double residual = std::abs(fs - lambda * fv);
      if (std::isnan(residual)) {
        report.homogeneous = false;
        report.failures.push_back(
            {k, "evaluation", fmt::format("F({} v) is not finite", lambda)});
        continue;
      }
      report.max_homogeneity_residual =
          std::max(report.max_homogeneity_residual, residual);
      if (residual > options.tol * std::max(1.0, lambda * fv)) {
        report.homogeneous = false;
        report.failures.push_back(
            {k, "homogeneity",
             fmt::format("|F({0} v) - {0} F(v)| = {1:.3g}", lambda,
                         residual)});
      }
    }

    try {
      const auto g = fundamental_tensor(f, v, options.step);
      const double lo = min_eigenvalue(g.matrix);
      report.min_eigenvalue = std::min(report.min_eigenvalue, lo);
      if (!(lo > options.pd_tol)) {
        report.positive_definite = false;
        report.failures.push_back(
            {k, "positive-definiteness",
             fmt::format("min eigenvalue of g_y is {:.6g}", lo)});
      }
    } catch (const std::exception& e) {
      report.positive_definite = false;
      report.failures.push_back({k, "evaluation", e.what()});
    }
  }
  if (report.min_eigenvalue == kInf) report.min_eigenvalue = 0.0;
  report.passed =
      report.nonnegative && report.homogeneous && report.positive_definite;
  return report;
}

RiemannProbe probe_riemann(const NormCandidate& f,
                           std::span<const Vector> sample_dirs, double tol,
                           double step) {
  if (sample_dirs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "at least one sample direction");
  }
  RiemannProbe probe;
  probe.tol = tol;
  try {
    const auto reference = fundamental_tensor(f, sample_dirs[0], step);
    for (std::size_t k = 1; k < sample_dirs.size(); ++k) {
      const auto g = fundamental_tensor(f, sample_dirs[k], step);
      probe.max_deviation =
          std::max(probe.max_deviation,
                   (g.matrix - reference.matrix).cwiseAbs().maxCoeff());
    }
  } catch (const Error&) {
    probe.max_deviation = kInf;
  }
  probe.y_independent = probe.max_deviation <= tol;
  return probe;
}

// Partition of unity ------------------------------------------------------

bool Box::contains(std::span<const double> p) const {
  if (p.size() != lower.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lower[i] || p[i] > upper[i]) return false;
  }
  return true;
}

namespace {

void validate_box(const Box& b, std::size_t dim, std::string_view what) {
  if (b.lower.size() != dim || b.upper.size() != dim) {
    throw Error(ErrorCode::kDimension,
                fmt::format("{} must have dimension {}", what, dim));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!std::isfinite(b.lower[i]) || !std::isfinite(b.upper[i]) ||
        !(b.lower[i] < b.upper[i])) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("{} is empty along axis {}", what, i + 1));
    }
  }
}

// log of the product bump, or -inf outside the open box.
double log_bump(const Box& b, std::span<const double> p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double half = 0.5 * (b.upper[i] - b.lower[i]);
    const double t = (p[i] - 0.5 * (b.upper[i] + b.lower[i])) / half;
    const double q = 1.0 - t * t;
    if (!(q > 0.0)) return -kInf;
    acc -= 1.0 / q;
  }
  return acc;
}

}  // namespace

PartitionOfUnity::PartitionOfUnity(std::vector<Box> charts)
    : charts_(std::move(charts)) {
  if (charts_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "cover has no charts");
  }
  const std::size_t dim = charts_.front().dimension();
  for (std::size_t a = 0; a < charts_.size(); ++a) {
    validate_box(charts_[a], dim, fmt::format("chart {}", a));
  }
}

Vector PartitionOfUnity::weights(std::span<const double> p) const {
  if (p.size() != charts_.front().dimension()) {
    throw Error(ErrorCode::kDimension, "base point has the wrong dimension");
  }
  Vector logs(charts_.size());
  double top = -kInf;
  for (std::size_t a = 0; a < charts_.size(); ++a) {
    logs[a] = log_bump(charts_[a], p);
    top = std::max(top, logs[a]);
  }
  if (top == -kInf) {
    throw Error(ErrorCode::kCoverage,
                fmt::format("point ({}) is covered by no chart",
                            fmt::join(p, ", ")));
  }
  double sum = 0.0;
  for (double& l : logs) {
    l = l == -kInf ? 0.0 : std::exp(l - top);
    sum += l;
  }
  for (double& l : logs) l /= sum;
  return logs;
}

PartitionOfUnity build_partition(const ChartCover& cover) {
  const std::size_t dim = cover.region.dimension();
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidInput, "region has dimension 0");
  }
  validate_box(cover.region, dim, "region");
  for (std::size_t a = 0; a < cover.charts.size(); ++a) {
    validate_box(cover.charts[a], dim, fmt::format("chart {}", a));
  }
  PartitionOfUnity partition(cover.charts);

  // About 1e5 lattice points in total, at least 2 per axis.
  const auto per_axis = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::pow(1e5, 1.0 / static_cast<double>(dim))),
      2, 101);
  std::vector<std::size_t> idx(dim, 0);
  Vector p(dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double u = static_cast<double>(idx[i]) /
                       static_cast<double>(per_axis - 1);
      p[i] = cover.region.lower[i] +
             u * (cover.region.upper[i] - cover.region.lower[i]);
    }
    (void)partition.weights(p);
    std::size_t i = 0;
    while (i < dim && ++idx[i] == per_axis) idx[i++] = 0;
    if (i == dim) break;
  }
  return partition;
}

NormCandidate assemble_norm(const ChartCover& cover,
                            const PartitionOfUnity& partition,
                            std::span<const double> p) {
  if (cover.norms.size() != partition.size()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("cover has {} norms for {} charts",
                            cover.norms.size(), partition.size()));
  }
  const std::size_t m = cover.norms.front().dimension;
  for (const auto& f : cover.norms) {
    if (f.dimension != m) {
      throw Error(ErrorCode::kDimension,
                  "chart norms do not share a dimension");
    }
  }

  const Vector h = partition.weights(p);
  std::vector<std::pair<double, NormCandidate>> terms;
  std::vector<std::string> parts;
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (h[a] == 0.0) continue;
    terms.emplace_back(h[a], cover.norms[a]);
    parts.push_back(fmt::format("{:.6g}*{}", h[a], cover.norms[a].label));
  }
  return {m,
          [terms = std::move(terms)](std::span<const double> v) {
            double acc = 0.0;
            for (const auto& [w, f] : terms) acc += w * f(v);
            return acc;
          },
          fmt::format("assembled({})", fmt::join(parts, " + "))};
}

// Kaehler checks ----------------------------------------------------------

std::vector<Vector> Lattice::points() const {
  const std::size_t dim = lower.size();
  if (dim == 0 || upper.size() != dim || points_per_axis == 0) return {};
  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    Vector p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double u = points_per_axis == 1
                           ? 0.0
                           : static_cast<double>(idx[i]) /
                                 static_cast<double>(points_per_axis - 1);
      p[i] = lower[i] + u * (upper[i] - lower[i]);
    }
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < dim && ++idx[i] == points_per_axis) idx[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

double Lattice::scale() const {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(lower.size(), upper.size()); ++i) {
    s = std::max(s, std::abs(upper[i] - lower[i]));
  }
  return s > 0.0 ? s : 1.0;
}

Eigen::MatrixXd almost_complex_structure(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    j(k + i, i) = 1.0;
    j(i, k + i) = -1.0;
  }
  return j;
}

MetricField constant_metric(Eigen::MatrixXd g) {
  return [g = std::move(g)](std::span<const double>) { return g; };
}

MetricField flat_metric(std::size_t n) {
  return constant_metric(Eigen::MatrixXd::Identity(
      2 * static_cast<Eigen::Index>(n), 2 * static_cast<Eigen::Index>(n)));
}

MetricField conformal_metric(std::size_t n) {
  const auto dim = 2 * static_cast<Eigen::Index>(n);
  return [dim](std::span<const double> p) {
    double phi = 0.0;
    for (double x : p) phi += x;
    return Eigen::MatrixXd(std::exp(0.25 * phi) *
                           Eigen::MatrixXd::Identity(dim, dim));
  };
}

MetricField product_metric(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return [k](std::span<const double> p) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double x = p[static_cast<std::size_t>(i)];
      const double y = p[static_cast<std::size_t>(k + i)];
      g(i, i) = g(k + i, k + i) = 1.0 + 0.5 * (x * x + y * y);
    }
    return g;
  };
}

KahlerReport kahler_check(const MetricField& g, std::size_t n,
                          const Lattice& grid, const KahlerOptions& options) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidInput, "complex dimension must be >= 1");
  }
  const std::size_t dim = 2 * n;
  if (grid.lower.size() != dim || grid.upper.size() != dim) {
    throw Error(ErrorCode::kDimension,
                fmt::format("lattice must live in R^{}", dim));
  }
  const auto points = grid.points();
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidInput, "lattice has no points");
  }
  const auto edim = static_cast<Eigen::Index>(dim);
  const Eigen::MatrixXd j = almost_complex_structure(n);

  auto metric_at = [&](std::span<const double> p) {
    Eigen::MatrixXd m = g(p);
    if (m.rows() != edim || m.cols() != edim) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("metric must be {0}x{0}, got {1}x{2}", dim,
                              m.rows(), m.cols()));
    }
    return m;
  };
  // kappa = g J, antisymmetrized so closedness is tested on a genuine 2-form.
  auto kappa_at = [&](std::span<const double> p) {
    const Eigen::MatrixXd k = metric_at(p) * j;
    return Eigen::MatrixXd(0.5 * (k - k.transpose()));
  };

  KahlerReport report;
  report.complex_dimension = n;
  report.points = points.size();
  report.closed_tol = options.closed_factor * grid.scale();
  const double fd_step = 1e-4 * grid.scale();

  for (const auto& p : points) {
    const Eigen::MatrixXd m = metric_at(p);
    if (!m.allFinite()) {
      report.symmetric_pd = false;
      report.failures.push_back({"symmetric-pd", p, "metric is not finite"});
      continue;
    }

    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    const double lo = min_eigenvalue(0.5 * (m + m.transpose()));
    if (asym > options.tol || !(lo > options.tol)) {
      report.symmetric_pd = false;
      report.failures.push_back(
          {"symmetric-pd", p,
           fmt::format("asymmetry {:.3g}, min eigenvalue {:.6g}", asym, lo)});
    }

    const Eigen::MatrixXd rotated = j.transpose() * m * j;
    for (Eigen::Index a = 0; a < edim && report.j_invariant; ++a) {
      for (Eigen::Index b = 0; b < edim; ++b) {
        if (std::abs(rotated(a, b) - m(a, b)) > options.tol) {
          report.j_invariant = false;
          report.j_witness = {static_cast<std::size_t>(a),
                              static_cast<std::size_t>(b)};
          report.j_witness_rotated = rotated(a, b);
          report.j_witness_plain = m(a, b);
          report.failures.push_back(
              {"j-invariance", p,
               fmt::format("g(Je{0}, Je{1}) = {2:.6g} but g(e{0}, e{1}) = "
                           "{3:.6g}",
                           a + 1, b + 1, rotated(a, b), m(a, b))});
          break;
        }
      }
    }

    const Eigen::MatrixXd k = m * j;
    const double k_sym = (k + k.transpose()).cwiseAbs().maxCoeff();
    if (k_sym > options.tol) {
      if (report.kappa_antisymmetric) {
        report.failures.push_back(
            {"kappa-antisymmetry", p,
             fmt::format("max |kappa + kappa^T| = {:.3g}", k_sym)});
      }
      report.kappa_antisymmetric = false;
    }

    if (dim >= 3) {
      std::vector<Eigen::MatrixXd> dk(dim);
      Vector q(p);
      for (std::size_t c = 0; c < dim; ++c) {
        q[c] = p[c] + fd_step;
        const Eigen::MatrixXd kp = kappa_at(q);
        q[c] = p[c] - fd_step;
        const Eigen::MatrixXd km = kappa_at(q);
        q[c] = p[c];
        dk[c] = (kp - km) / (2.0 * fd_step);
      }
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
          for (std::size_t c = b + 1; c < dim; ++c) {
            const auto ia = static_cast<Eigen::Index>(a);
            const auto ib = static_cast<Eigen::Index>(b);
            const auto ic = static_cast<Eigen::Index>(c);
            const double v =
                dk[a](ib, ic) - dk[b](ia, ic) + dk[c](ia, ib);
            if (std::abs(v) > report.max_dkappa) report.max_dkappa = std::abs(v);
            if (std::abs(v) > report.closed_tol && report.closed) {
              report.closed = false;
              report.failures.push_back(
                  {"closedness", p,
                   fmt::format("(d kappa)_{{{},{},{}}} = {:.3g}", a + 1, b + 1,
                               c + 1, v)});
            }
          }
        }
      }
    }
  }
  report.passed = report.symmetric_pd && report.j_invariant &&
                  report.kappa_antisymmetric && report.closed;
  return report;
}

// Classification ---------------------------------------------------------

std::string_view to_string(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::kSmarandachePseudoManifold:
      return "SmarandachePseudoManifold";
    case GeometryKind::kFinsler:
      return "Finsler";
    case GeometryKind::kRiemann:
      return "Riemann";
    case GeometryKind::kKahler:
      return "Kahler";
    case GeometryKind::kNotClassified:
      return "NotClassified";
  }
  return "?";
}

GeometryClass classify_geometry(const geodesics::DetectionReport& detection,
                                const MinkowskiReport& norm_report,
                                const RiemannProbe& riemann_probe,
                                const KahlerReport* kahler_report) {
  GeometryClass out;
  if (detection.denied) {
    out.kind = GeometryKind::kSmarandachePseudoManifold;
    out.evidence.push_back(fmt::format(
        "parallel axiom denied with {} witness(es)",
        detection.witnesses.size()));
    return out;
  }
  out.all_points_euclidean = true;
  out.evidence.push_back("all points euclidean");
  if (!norm_report.passed) {
    out.kind = GeometryKind::kNotClassified;
    out.evidence.push_back(
        fmt::format("{} fails the Minkowski checks", norm_report.label));
    return out;
  }
  out.kind = GeometryKind::kFinsler;
  out.evidence.push_back(
      fmt::format("{} passes the Minkowski checks", norm_report.label));
  if (!riemann_probe.y_independent) {
    out.evidence.push_back(fmt::format(
        "g_y varies with y (max deviation {:.3g})",
        riemann_probe.max_deviation));
    return out;
  }
  out.kind = GeometryKind::kRiemann;
  out.evidence.push_back("g_y independent of y");
  if (kahler_report != nullptr) {
    if (kahler_report->passed) {
      out.kind = GeometryKind::kKahler;
      out.evidence.push_back(
          "hermitian form h = g + i kappa passes the Kaehler checks; its "
          "identification with F is declared");
    } else {
      out.evidence.push_back("Kaehler checks fail");
    }
  }
  return out;
}

}  // namespace pseudogeo::finsler
