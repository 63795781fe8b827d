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

#include "pseudogeo/omega.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pseudogeo/error.hpp"

namespace pseudogeo::omega {

namespace {

void require_dimension(std::size_t n) {
  if (n < kMinDimension) {
    throw Error(ErrorCode::kDimension,
                fmt::format("dimension must be at least {}, got {}",
                            kMinDimension, n));
  }
}

void require_finite(std::span<const double> values, std::string_view what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kInvalidInput,
                  fmt::format("{} component {} is not finite", what, i + 1));
    }
  }
}

}  // namespace

double wrap(double x, double period) noexcept {
  // fmod is exact, so the only rounding happens when adding the period back.
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

OmegaValue OmegaValue::reduce(std::span<const double> raw) {
  require_dimension(raw.size());
  require_finite(raw, "omega");
  std::vector<double> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(),
                 [](double w) { return wrap(w, kFourPi); });
  return OmegaValue(std::move(out));
}

OmegaValue reduce_omega(std::span<const double> raw) {
  return OmegaValue::reduce(raw);
}

std::string_view to_string(PointTag tag) noexcept {
  switch (tag) {
    case PointTag::kElliptic:
      return "Elliptic";
    case PointTag::kEuclidean:
      return "Euclidean";
    case PointTag::kHyperbolic:
      return "Hyperbolic";
  }
  return "?";
}

PointTag classify_component(double reduced) noexcept {
  if (std::abs(reduced - kTwoPi) <= kEuclideanTolerance) {
    return PointTag::kEuclidean;
  }
  return reduced < kTwoPi ? PointTag::kElliptic : PointTag::kHyperbolic;
}

std::size_t PointClass::euclidean_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(per_axis.begin(), per_axis.end(), PointTag::kEuclidean));
}

bool PointClass::all_euclidean() const noexcept {
  return euclidean_count() == per_axis.size();
}

PointClass classify_point(const OmegaValue& omega) {
  PointClass out;
  out.per_axis.reserve(omega.dimension());
  for (double w : omega.per_axis()) {
    out.per_axis.push_back(classify_component(w));
  }
  return out;
}

DirectionAngles DirectionAngles::free(std::span<const double> angles) {
  require_dimension(angles.size());
  require_finite(angles, "direction angle");
  std::vector<double> out(angles.size());
  std::transform(angles.begin(), angles.end(), out.begin(),
                 [](double t) { return wrap(t, kTwoPi); });
  return DirectionAngles(std::move(out));
}

DirectionAngles DirectionAngles::from_unit_vector(
    std::span<const double> direction) {
  require_dimension(direction.size());
  require_finite(direction, "direction");
  double norm2 = 0.0;
  for (double d : direction) norm2 += d * d;
  if (std::abs(std::sqrt(norm2) - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("direction is not unit length (|d| = {})",
                            std::sqrt(norm2)));
  }
  std::vector<double> out(direction.size());
  std::transform(direction.begin(), direction.end(), out.begin(),
                 [](double d) { return std::acos(std::clamp(d, -1.0, 1.0)); });
  return DirectionAngles(std::move(out));
}

std::vector<double> DirectionAngles::cosines() const {
  std::vector<double> out(per_axis_.size());
  std::transform(per_axis_.begin(), per_axis_.end(), out.begin(),
                 [](double t) { return std::cos(t); });
  return out;
}

bool DirectionAngles::is_unit_consistent() const {
  double sum = 0.0;
  for (double c : cosines()) sum += c * c;
  return std::abs(sum - 1.0) <= kUnitTolerance;
}

double deflection(double reduced_component) noexcept {
  switch (classify_component(reduced_component)) {
    case PointTag::kEuclidean:
      return 0.0;
    case PointTag::kElliptic:
      return kPi - reduced_component / 2.0;
    case PointTag::kHyperbolic:
      return -reduced_component / 2.0;
  }
  return 0.0;
}

DirectionAngles transform_direction(const DirectionAngles& theta,
                                    const OmegaValue& omega) {
  if (theta.dimension() != omega.dimension()) {
    throw Error(ErrorCode::kDimension,
                fmt::format("direction has {} angles but omega has {}",
                            theta.dimension(), omega.dimension()));
  }
  std::vector<double> out(theta.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = theta[i] + deflection(omega[i]);
  }
  return DirectionAngles::free(out);
}

bool is_identity_mapping(std::span<const double> raw) {
  return classify_point(OmegaValue::reduce(raw)).all_euclidean();
}

}  // namespace pseudogeo::omega
