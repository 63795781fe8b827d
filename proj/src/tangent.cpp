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

#include "pseudogeo/tangent.hpp"

#include <fmt/format.h>

#include "pseudogeo/error.hpp"

namespace pseudogeo::tangent {

namespace {

std::string_view side_mark(Side side) {
  switch (side) {
    case Side::kTwoSided:
      return "";
    case Side::kMinusSide:
      return "-";
    case Side::kPlusSide:
      return "+";
  }
  return "";
}

}  // namespace

std::string vector_label(const BasisVector& b) {
  return fmt::format("d{}/dx{}", side_mark(b.side), b.axis);
}

std::string covector_label(const BasisVector& b) {
  return fmt::format("d{}x{}", side_mark(b.side), b.axis);
}

TangentSpaceModel::TangentSpaceModel(omega::PointClass pclass)
    : pclass_(std::move(pclass)) {
  const std::size_t n = pclass_.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (pclass_.per_axis[i] == omega::PointTag::kEuclidean) {
      euclidean_axes_.push_back(i + 1);
      basis_.push_back({i + 1, Side::kTwoSided});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pclass_.per_axis[i] != omega::PointTag::kEuclidean) {
      basis_.push_back({i + 1, Side::kMinusSide});
      basis_.push_back({i + 1, Side::kPlusSide});
    }
  }
}

TangentSpaceModel tangent_space(const omega::PointClass& pclass) {
  return TangentSpaceModel(pclass);
}

CotangentSpaceModel cotangent_space(const omega::PointClass& pclass) {
  return CotangentSpaceModel(pclass);
}

int dual_pairing(const BasisVector& covector, const BasisVector& vector) {
  return covector == vector ? 1 : 0;
}

int dual_pairing(const CotangentSpaceModel& cotangent, std::size_t i,
                 const TangentSpaceModel& tangent, std::size_t j) {
  if (cotangent.point_class() != tangent.point_class()) {
    throw Error(ErrorCode::kInvalidInput,
                "cotangent and tangent models are over different point "
                "classes");
  }
  if (i >= cotangent.dimension() || j >= tangent.dimension()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("basis index ({}, {}) out of range for dimension "
                            "{}",
                            i, j, tangent.dimension()));
  }
  return dual_pairing(cotangent.basis()[i], tangent.basis()[j]);
}

std::vector<std::vector<int>> pairing_matrix(
    const CotangentSpaceModel& cotangent, const TangentSpaceModel& tangent) {
  std::vector<std::vector<int>> m(cotangent.dimension(),
                                  std::vector<int>(tangent.dimension(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      m[i][j] = dual_pairing(cotangent, i, tangent, j);
    }
  }
  return m;
}

TangentVector::TangentVector(TangentSpaceModel model,
                             std::vector<double> coefficients)
    : model_(std::move(model)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != model_.dimension()) {
    throw Error(ErrorCode::kDimension,
                fmt::format("expected {} coefficients, got {}",
                            model_.dimension(), coefficients_.size()));
  }
}

TangentVector& TangentVector::operator+=(const TangentVector& other) {
  if (!(model_ == other.model_)) {
    throw Error(ErrorCode::kInvalidInput,
                "cannot add tangent vectors from different tangent spaces");
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  return *this;
}

TangentVector& TangentVector::operator*=(double lambda) noexcept {
  for (double& c : coefficients_) c *= lambda;
  return *this;
}

TangentVector tangent_vector(const TangentSpaceModel& model,
                             std::vector<double> coefficients) {
  return TangentVector(model, std::move(coefficients));
}

}  // namespace pseudogeo::tangent
