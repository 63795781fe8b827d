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

// Discrete scenes over R^n with a finite set of charged points. Every point
// not listed as a charge is euclidean. Rays travel in straight segments and
// are redirected by each charge they pass within epsilon of.

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudogeo/omega.hpp"

namespace pseudogeo::geodesics {

using Position = std::vector<double>;

struct ChargedPoint {
  Position position;
  omega::OmegaValue omega;
};

/// Axis-aligned box [lower, upper].
struct Bounds {
  Position lower;
  Position upper;

  std::size_t dimension() const noexcept { return lower.size(); }
  bool contains(std::span<const double> p) const;
};

/// Immutable discrete model of (R^n, omega).
class Scene {
 public:
  /// Validates every invariant: n >= 2, epsilon > 0, nonempty finite bounds,
  /// matching dimensions, finite positions, and no two charges within
  /// epsilon of each other. Throws pseudogeo::Error naming the offending
  /// entry.
  Scene(std::size_t dimension, std::vector<ChargedPoint> charges,
        double epsilon, Bounds bounds);

  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const ChargedPoint> charges() const noexcept { return charges_; }
  double epsilon() const noexcept { return epsilon_; }
  const Bounds& bounds() const noexcept { return bounds_; }

 private:
  std::size_t dimension_;
  std::vector<ChargedPoint> charges_;
  double epsilon_;
  Bounds bounds_;
};

struct TraceEvent {
  std::size_t charge_index;
  omega::DirectionAngles incoming;
  omega::DirectionAngles outgoing;
  /// Index into RayTrace::vertices where the event fired.
  std::size_t vertex_index;
};

struct RayTrace {
  std::vector<Position> vertices;
  /// Unit direction of segment k, from vertices[k] to vertices[k + 1].
  std::vector<Position> directions;
  std::vector<TraceEvent> events;

  std::size_t segment_count() const noexcept { return directions.size(); }
};

/// Propagates a ray through the scene.
///
/// The nearest charge ahead of the current position whose perpendicular
/// distance to the ray is at most epsilon fires; ties go to the smaller
/// charge index. The event vertex is the point of closest approach. Each
/// charge fires at most once. After max_events events no further charges
/// are considered and the ray runs straight to the bounds.
///
/// Throws kInvalidInput for a non-unit direction, kOutOfBounds for an
/// origin outside the bounds and kDegenerateDirection when a transformed
/// cosine vector has norm below 1e-9.
RayTrace trace_ray(const Scene& scene, std::span<const double> origin,
                   std::span<const double> direction, std::size_t max_events);

enum class ParallelCount { kExactlyOne, kInfinitelyMany, kZero };

std::string_view to_string(ParallelCount count) noexcept;

/// Local parallels through a point to a line parallel to axis line_axis
/// (1-based). Throws kInvalidInput when the axis is out of range.
ParallelCount count_local_parallels(const omega::PointClass& pclass,
                                    std::size_t line_axis);

enum class WitnessRule {
  kMixedEuclideanNonEuclidean,
  kTwoEllipticSameDirection,
  kTwoHyperbolicSameDirection,
};

std::string_view to_string(WitnessRule rule) noexcept;

/// Point id standing for the euclidean background of the scene.
inline constexpr std::size_t kBackground =
    std::numeric_limits<std::size_t>::max();

struct Witness {
  std::size_t first;   // charge index or kBackground
  std::size_t second;  // charge index
  WitnessRule rule;
  /// 1-based axis for the same-direction rules.
  std::optional<std::size_t> axis;
};

enum class Verdict { kEuclidean, kSmarandacheManifold };

std::string_view to_string(Verdict verdict) noexcept;

struct DetectionReport {
  bool denied = false;
  std::vector<Witness> witnesses;
  Verdict verdict = Verdict::kEuclidean;
  std::size_t dimension = 0;
  /// Local-parallel behaviours seen along each axis, over the background
  /// and every charge, in ParallelCount order.
  std::vector<std::vector<ParallelCount>> axis_behaviours;
};

DetectionReport detect_smarandache(const Scene& scene);

/// Declared smoothness order of the omega field: finite r >= 1 or infinite.
class SmoothnessOrder {
 public:
  static SmoothnessOrder finite(int r);
  static SmoothnessOrder infinite() noexcept { return SmoothnessOrder(0); }

  bool is_infinite() const noexcept { return order_ == 0; }
  int order() const noexcept { return order_; }

 private:
  explicit SmoothnessOrder(int order) noexcept : order_(order) {}
  int order_;
};

struct StructureReport {
  SmoothnessOrder declared;
  bool condition_charts_declared = true;
  bool condition_transitions_declared = true;
  bool smarandache = false;
  DetectionReport detection;
  std::vector<std::string> warnings;
  std::string verdict;
};

/// Checks the checkable part of a C^r differential Smarandache structure.
/// The chart and transition-smoothness conditions are declared metadata; the
/// Smarandache condition is evaluated with detect_smarandache.
StructureReport validate_differential_structure(const Scene& scene,
                                                SmoothnessOrder declared);

}  // namespace pseudogeo::geodesics
