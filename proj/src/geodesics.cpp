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

#include "pseudogeo/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pseudogeo/error.hpp"

namespace pseudogeo::geodesics {

namespace {

constexpr double kDegenerateNorm = 1e-9;
constexpr double kForwardTolerance = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

// Distance along d from p to the boundary of the box.
double exit_distance(const Bounds& bounds, std::span<const double> p,
                     std::span<const double> d) {
  double t = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (d[i] > 0.0) {
      t = std::min(t, (bounds.upper[i] - p[i]) / d[i]);
    } else if (d[i] < 0.0) {
      t = std::min(t, (bounds.lower[i] - p[i]) / d[i]);
    }
  }
  return std::max(t, 0.0);
}

Position advance(std::span<const double> p, std::span<const double> d,
                 double t) {
  Position out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + t * d[i];
  return out;
}

}  // namespace

bool Bounds::contains(std::span<const double> p) const {
  if (p.size() != lower.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lower[i] || p[i] > upper[i]) return false;
  }
  return true;
}

Scene::Scene(std::size_t dimension, std::vector<ChargedPoint> charges,
             double epsilon, Bounds bounds)
    : dimension_(dimension),
      charges_(std::move(charges)),
      epsilon_(epsilon),
      bounds_(std::move(bounds)) {
  if (dimension_ < omega::kMinDimension) {
    throw Error(ErrorCode::kDimension,
                fmt::format("scene dimension must be at least {}, got {}",
                            omega::kMinDimension, dimension_));
  }
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw Error(ErrorCode::kValidation,
                fmt::format("epsilon must be positive and finite, got {}",
                            epsilon_));
  }
  if (bounds_.lower.size() != dimension_ ||
      bounds_.upper.size() != dimension_) {
    throw Error(ErrorCode::kDimension,
                fmt::format("bounds must have {} components per corner",
                            dimension_));
  }
  if (!all_finite(bounds_.lower) || !all_finite(bounds_.upper)) {
    throw Error(ErrorCode::kValidation, "bounds are not finite");
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (!(bounds_.lower[i] < bounds_.upper[i])) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("bounds are empty along axis {}", i + 1));
    }
  }
  for (std::size_t k = 0; k < charges_.size(); ++k) {
    const auto& c = charges_[k];
    if (c.position.size() != dimension_ ||
        c.omega.dimension() != dimension_) {
      throw Error(ErrorCode::kDimension,
                  fmt::format("charge {} does not have dimension {}", k,
                              dimension_));
    }
    if (!all_finite(c.position)) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("charge {} has a non-finite position", k));
    }
  }
  for (std::size_t a = 0; a < charges_.size(); ++a) {
    for (std::size_t b = a + 1; b < charges_.size(); ++b) {
      if (distance(charges_[a].position, charges_[b].position) <= epsilon_) {
        throw Error(ErrorCode::kValidation,
                    fmt::format("charges within epsilon: {} and {}", a, b));
      }
    }
  }
}

RayTrace trace_ray(const Scene& scene, std::span<const double> origin,
                   std::span<const double> direction, std::size_t max_events) {
  const std::size_t n = scene.dimension();
  if (origin.size() != n || direction.size() != n) {
    throw Error(ErrorCode::kDimension,
                fmt::format("ray must have dimension {}", n));
  }
  if (!all_finite(origin) || !all_finite(direction)) {
    throw Error(ErrorCode::kInvalidInput, "ray is not finite");
  }
  if (std::abs(std::sqrt(dot(direction, direction)) - 1.0) >
      omega::kUnitTolerance) {
    throw Error(ErrorCode::kInvalidInput, "ray direction is not unit length");
  }
  if (!scene.bounds().contains(origin)) {
    throw Error(ErrorCode::kOutOfBounds,
                fmt::format("ray origin ({}) is outside the scene bounds",
                            fmt::join(origin, ", ")));
  }

  const auto charges = scene.charges();
  std::vector<bool> fired(charges.size(), false);
  // Charges whose closest approach is within this distance of the current
  // vertex count as behind the ray; rounding in a fresh direction would
  // otherwise make a charge beside the vertex look a hair ahead.
  double extent = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    extent = std::max(extent, scene.bounds().upper[i] - scene.bounds().lower[i]);
  }
  const double t_min = kForwardTolerance * extent;

  RayTrace trace;
  Position p(origin.begin(), origin.end());
  Position d(direction.begin(), direction.end());
  trace.vertices.push_back(p);

  for (;;) {
    const double t_exit = exit_distance(scene.bounds(), p, d);

    std::optional<std::size_t> hit;
    double t_hit = 0.0;
    if (trace.events.size() < max_events) {
      for (std::size_t k = 0; k < charges.size(); ++k) {
        if (fired[k]) continue;
        const auto& c = charges[k].position;
        Position rel(n);
        for (std::size_t i = 0; i < n; ++i) rel[i] = c[i] - p[i];
        const double t = dot(rel, d);
        if (!(t > t_min) || t > t_exit) continue;
        const Position foot = advance(p, d, t);
        if (distance(foot, c) > scene.epsilon()) continue;
        if (!hit || t < t_hit) {
          hit = k;
          t_hit = t;
        }
      }
    }

    if (!hit) {
      trace.directions.push_back(d);
      trace.vertices.push_back(advance(p, d, t_exit));
      break;
    }

    const std::size_t k = *hit;
    fired[k] = true;
    trace.directions.push_back(d);
    p = advance(p, d, t_hit);
    trace.vertices.push_back(p);

    auto incoming = omega::DirectionAngles::from_unit_vector(d);
    auto outgoing = omega::transform_direction(incoming, charges[k].omega);
    Position cosines = outgoing.cosines();
    const double norm = std::sqrt(dot(cosines, cosines));
    if (norm < kDegenerateNorm) {
      throw Error(ErrorCode::kDegenerateDirection,
                  fmt::format("charge {} maps the ray to a degenerate "
                              "direction (|cos theta| = {:.3g})",
                              k, norm));
    }
    for (double& c : cosines) c /= norm;
    d = std::move(cosines);
    trace.events.push_back(TraceEvent{k, std::move(incoming),
                                      std::move(outgoing),
                                      trace.vertices.size() - 1});
  }
  return trace;
}

std::string_view to_string(ParallelCount count) noexcept {
  switch (count) {
    case ParallelCount::kExactlyOne:
      return "ExactlyOne";
    case ParallelCount::kInfinitelyMany:
      return "InfinitelyMany";
    case ParallelCount::kZero:
      return "Zero";
  }
  return "?";
}

ParallelCount count_local_parallels(const omega::PointClass& pclass,
                                    std::size_t line_axis) {
  if (line_axis < 1 || line_axis > pclass.dimension()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("axis {} is outside 1..{}", line_axis,
                            pclass.dimension()));
  }
  switch (pclass.per_axis[line_axis - 1]) {
    case omega::PointTag::kEuclidean:
      return ParallelCount::kExactlyOne;
    case omega::PointTag::kElliptic:
      return ParallelCount::kInfinitelyMany;
    case omega::PointTag::kHyperbolic:
      return ParallelCount::kZero;
  }
  return ParallelCount::kExactlyOne;
}

std::string_view to_string(WitnessRule rule) noexcept {
  switch (rule) {
    case WitnessRule::kMixedEuclideanNonEuclidean:
      return "MixedEuclideanNonEuclidean";
    case WitnessRule::kTwoEllipticSameDirection:
      return "TwoEllipticSameDirection";
    case WitnessRule::kTwoHyperbolicSameDirection:
      return "TwoHyperbolicSameDirection";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::kEuclidean:
      return "Euclidean";
    case Verdict::kSmarandacheManifold:
      return "SmarandacheManifold";
  }
  return "?";
}

DetectionReport detect_smarandache(const Scene& scene) {
  const auto charges = scene.charges();
  const std::size_t n = scene.dimension();

  std::vector<omega::PointClass> classes;
  classes.reserve(charges.size());
  for (const auto& c : charges) classes.push_back(omega::classify_point(c.omega));

  DetectionReport report;
  report.dimension = n;

  // A finite charge set never covers R^n, so the euclidean background is
  // always present and is paired with a euclidean charge when one exists.
  std::size_t euclidean_partner = kBackground;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].all_euclidean()) {
      euclidean_partner = k;
      break;
    }
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (!classes[k].all_euclidean()) {
      report.witnesses.push_back(
          {euclidean_partner, k, WitnessRule::kMixedEuclideanNonEuclidean,
           std::nullopt});
    }
  }

  for (std::size_t axis = 0; axis < n; ++axis) {
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        const auto ta = classes[a].per_axis[axis];
        if (ta != classes[b].per_axis[axis]) continue;
        if (ta == omega::PointTag::kElliptic) {
          report.witnesses.push_back(
              {a, b, WitnessRule::kTwoEllipticSameDirection, axis + 1});
        } else if (ta == omega::PointTag::kHyperbolic) {
          report.witnesses.push_back(
              {a, b, WitnessRule::kTwoHyperbolicSameDirection, axis + 1});
        }
      }
    }
  }

  for (std::size_t axis = 1; axis <= n; ++axis) {
    std::set<ParallelCount> seen{ParallelCount::kExactlyOne};
    for (const auto& pc : classes) seen.insert(count_local_parallels(pc, axis));
    report.axis_behaviours.emplace_back(seen.begin(), seen.end());
  }

  report.denied = !report.witnesses.empty();
  report.verdict =
      report.denied ? Verdict::kSmarandacheManifold : Verdict::kEuclidean;
  return report;
}

SmoothnessOrder SmoothnessOrder::finite(int r) {
  if (r < 1) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("smoothness order must be at least 1, got {}", r));
  }
  return SmoothnessOrder(r);
}

StructureReport validate_differential_structure(const Scene& scene,
                                                SmoothnessOrder declared) {
  StructureReport report{.declared = declared,
                         .detection = detect_smarandache(scene),
                         .warnings = {},
                         .verdict = {}};
  report.smarandache = report.detection.denied;
  if (!scene.charges().empty()) {
    report.warnings.push_back(
        "pointwise omega field is not continuous; smoothness is declarative "
        "only");
  }
  if (report.smarandache) {
    report.verdict = "differential Smarandache manifold (declared smoothness)";
  } else {
    report.verdict = "not Smarandache";
  }
  return report;
}

}  // namespace pseudogeo::geodesics
