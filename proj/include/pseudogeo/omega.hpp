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

// Angle charges of a spatially directional mapping and the direction
// transform they induce on lines passing through a charged point.
//
// A charge is a vector of n angles reduced into [0, 4pi). Per axis, a reduced
// charge below 2pi makes the point elliptic in that direction, exactly 2pi
// euclidean, above 2pi hyperbolic. A line with direction angles theta_i
// leaves the point with angles theta_i - w_i/2 + s_i, where s_i = pi for
// w_i <= 2pi and 0 otherwise.

#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace pseudogeo::omega {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Absolute tolerance for comparing a reduced charge against 2pi.
inline constexpr double kEuclideanTolerance = 1e-12;

/// Tolerance on sum(cos^2 theta_i) = 1 for unit-consistent direction angles.
inline constexpr double kUnitTolerance = 1e-9;

/// Smallest supported ambient dimension.
inline constexpr std::size_t kMinDimension = 2;

/// Reduces x into [0, period). Non-finite input is returned unchanged.
double wrap(double x, double period) noexcept;

/// A per-axis charge vector with every component in [0, 4pi).
class OmegaValue {
 public:
  /// Reduces raw angles mod 4pi. Throws kDimension for n < 2 and
  /// kInvalidInput for non-finite components.
  static OmegaValue reduce(std::span<const double> raw);

  std::size_t dimension() const noexcept { return per_axis_.size(); }
  std::span<const double> per_axis() const noexcept { return per_axis_; }
  double operator[](std::size_t axis) const { return per_axis_.at(axis); }

  friend bool operator==(const OmegaValue&, const OmegaValue&) = default;

 private:
  explicit OmegaValue(std::vector<double> values)
      : per_axis_(std::move(values)) {}

  std::vector<double> per_axis_;
};

/// Free-function spelling of OmegaValue::reduce.
OmegaValue reduce_omega(std::span<const double> raw);

enum class PointTag { kElliptic, kEuclidean, kHyperbolic };

std::string_view to_string(PointTag tag) noexcept;

/// Classifies a single reduced component.
PointTag classify_component(double reduced) noexcept;

struct PointClass {
  std::vector<PointTag> per_axis;

  std::size_t dimension() const noexcept { return per_axis.size(); }
  /// Number of euclidean axes.
  std::size_t euclidean_count() const noexcept;
  bool all_euclidean() const noexcept;

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

PointClass classify_point(const OmegaValue& omega);

/// Direction angles against the coordinate axes.
///
/// Free angles follow the construction literally and carry no constraint.
/// Unit-consistent angles come from a unit vector, so sum(cos^2) = 1.
class DirectionAngles {
 public:
  /// Normalizes every angle into [0, 2pi). Throws kInvalidInput on
  /// non-finite input and kDimension for n < 2.
  static DirectionAngles free(std::span<const double> angles);

  /// theta_i = arccos(d_i). Throws kInvalidInput unless |d| = 1 within
  /// kUnitTolerance.
  static DirectionAngles from_unit_vector(std::span<const double> direction);

  std::size_t dimension() const noexcept { return per_axis_.size(); }
  std::span<const double> per_axis() const noexcept { return per_axis_; }
  double operator[](std::size_t axis) const { return per_axis_.at(axis); }

  /// cos(theta_i) per axis.
  std::vector<double> cosines() const;
  /// True when sum(cos^2 theta_i) = 1 within kUnitTolerance.
  bool is_unit_consistent() const;

  friend bool operator==(const DirectionAngles&,
                         const DirectionAngles&) = default;

 private:
  explicit DirectionAngles(std::vector<double> values)
      : per_axis_(std::move(values)) {}

  std::vector<double> per_axis_;
};

/// Per-axis rotation s_i - w_i/2, zero exactly on euclidean axes.
double deflection(double reduced_component) noexcept;

/// Applies the charge to a line's direction angles; output in [0, 2pi).
/// Throws kDimension when dimensions differ.
DirectionAngles transform_direction(const DirectionAngles& theta,
                                    const OmegaValue& omega);

/// True iff every component reduces to 2pi, i.e. w_i = 2 pi k_i with k_i odd.
bool is_identity_mapping(std::span<const double> raw);

}  // namespace pseudogeo::omega
