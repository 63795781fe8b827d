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

// Tangent and cotangent spaces at a classified point.
//
// A euclidean axis contributes one two-sided derivative. Every other axis
// contributes independent left and right derivatives, so a point with s
// euclidean axes out of n has a (2n - s)-dimensional tangent space.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pseudogeo/omega.hpp"

namespace pseudogeo::tangent {

enum class Side { kTwoSided, kMinusSide, kPlusSide };

struct BasisVector {
  std::size_t axis;  // 1-based
  Side side;

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Display forms: "d/dx1", "d-/dx2", "d+/dx2".
std::string vector_label(const BasisVector& b);
/// Display forms: "dx1", "d-x2", "d+x2".
std::string covector_label(const BasisVector& b);

class TangentSpaceModel {
 public:
  /// Basis order: two-sided vectors by axis, then (minus, plus) pairs by axis.
  explicit TangentSpaceModel(omega::PointClass pclass);

  std::size_t n() const noexcept { return pclass_.dimension(); }
  const omega::PointClass& point_class() const noexcept { return pclass_; }
  std::span<const std::size_t> euclidean_axes() const noexcept {
    return euclidean_axes_;
  }
  std::span<const BasisVector> basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  friend bool operator==(const TangentSpaceModel&,
                         const TangentSpaceModel&) = default;

 private:
  omega::PointClass pclass_;
  std::vector<std::size_t> euclidean_axes_;
  std::vector<BasisVector> basis_;
};

/// Same enumeration as the tangent model; entries are read as covectors.
class CotangentSpaceModel {
 public:
  explicit CotangentSpaceModel(omega::PointClass pclass)
      : dual_(std::move(pclass)) {}

  std::size_t n() const noexcept { return dual_.n(); }
  const omega::PointClass& point_class() const noexcept {
    return dual_.point_class();
  }
  std::span<const std::size_t> euclidean_axes() const noexcept {
    return dual_.euclidean_axes();
  }
  std::span<const BasisVector> basis() const noexcept { return dual_.basis(); }
  std::size_t dimension() const noexcept { return dual_.dimension(); }

 private:
  TangentSpaceModel dual_;
};

TangentSpaceModel tangent_space(const omega::PointClass& pclass);
CotangentSpaceModel cotangent_space(const omega::PointClass& pclass);

/// 1 iff same axis and same side. Mixed sides pair to 0.
int dual_pairing(const BasisVector& covector, const BasisVector& vector);

/// Pairs cotangent basis entry i with tangent basis entry j. Throws
/// kInvalidInput when the models sit over different point classes or an
/// index is out of range.
int dual_pairing(const CotangentSpaceModel& cotangent, std::size_t i,
                 const TangentSpaceModel& tangent, std::size_t j);

/// Row i, column j holds dual_pairing(cotangent, i, tangent, j).
std::vector<std::vector<int>> pairing_matrix(
    const CotangentSpaceModel& cotangent, const TangentSpaceModel& tangent);

/// A tangent vector as coefficients over the model's basis.
class TangentVector {
 public:
  /// Throws kDimension unless coefficients match the model dimension.
  TangentVector(TangentSpaceModel model, std::vector<double> coefficients);

  const TangentSpaceModel& model() const noexcept { return model_; }
  std::span<const double> coefficients() const noexcept {
    return coefficients_;
  }

  /// Throws kInvalidInput when the operands live in different models.
  TangentVector& operator+=(const TangentVector& other);
  TangentVector& operator*=(double lambda) noexcept;

  friend TangentVector operator+(TangentVector a, const TangentVector& b) {
    return a += b;
  }
  friend TangentVector operator*(double lambda, TangentVector v) {
    return v *= lambda;
  }

 private:
  TangentSpaceModel model_;
  std::vector<double> coefficients_;
};

TangentVector tangent_vector(const TangentSpaceModel& model,
                             std::vector<double> coefficients);

}  // namespace pseudogeo::tangent
