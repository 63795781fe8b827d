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

#include "pseudogeo/fiber.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pseudogeo/error.hpp"

namespace pseudogeo::fiber {

PfbValidation PfbValidation::run(const PfbSpec& s) {
  PfbValidation out;
  auto& errors = out.errors;
  if (s.dim_m < 1) {
    errors.push_back(fmt::format("dim M = {} must be at least 1", s.dim_m));
  }
  if (s.dim_p <= s.dim_m) {
    errors.push_back(fmt::format("dim P = {} must exceed dim M = {}", s.dim_p,
                                 s.dim_m));
  }
  if (s.group_dim < 0) {
    errors.push_back(
        fmt::format("group dimension {} must be nonnegative", s.group_dim));
  }
  if (s.lambda_p < 0 || s.lambda_p > s.dim_p) {
    errors.push_back(fmt::format("lambda = {} is outside 0..dim P = {}",
                                 s.lambda_p, s.dim_p));
  }
  // The divisibility checks only make sense once the dimensions are sane.
  if (s.dim_m >= 1 && s.dim_p > s.dim_m) {
    if (s.dim_p % s.dim_m != 0) {
      errors.push_back(fmt::format(
          "mu = dim P / dim M = {}/{} is not an integer", s.dim_p, s.dim_m));
    }
    if ((s.lambda_p * s.dim_m) % s.dim_p != 0) {
      errors.push_back(fmt::format(
          "lambda_M = lambda * dim M / dim P = {}/{} is not an integer",
          s.lambda_p * s.dim_m, s.dim_p));
    }
  }
  if (errors.empty()) out.valid = ValidatedPfb(s);
  return out;
}

PfbValidation validate_pfb(const PfbSpec& spec) {
  return PfbValidation::run(spec);
}

BundleDimensions vertical_dimension(const ValidatedPfb& pfb) {
  const auto& s = pfb.spec();
  const long numerator = (s.dim_p - s.dim_m) * (2 * s.dim_p - s.lambda_p);
  if (numerator % s.dim_p != 0) {
    throw Error(ErrorCode::kInternal,
                fmt::format("vertical dimension {}/{} is not an integer",
                            numerator, s.dim_p));
  }
  BundleDimensions d;
  d.vertical = numerator / s.dim_p;
  d.horizontal = 2 * s.dim_m - pfb.lambda_m();
  d.total = 2 * s.dim_p - s.lambda_p;
  return d;
}

bool is_classical_pfb(long dim_p, std::span<const long> lambdas) {
  if (lambdas.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no sampled points");
  }
  return std::all_of(lambdas.begin(), lambdas.end(),
                     [dim_p](long l) { return l == dim_p; });
}

}  // namespace pseudogeo::fiber
