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

// Dimension bookkeeping for principal fiber bundles over pseudo-manifolds.
// Only dimensions are tracked; no bundle data structures are built.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudogeo::fiber {

struct PfbSpec {
  long dim_p = 0;      // total space
  long dim_m = 0;      // base
  long group_dim = 0;  // fiber group
  long lambda_p = 0;   // euclidean directions at the point of P
};

/// A spec that satisfied every regularity constraint.
class ValidatedPfb {
 public:
  const PfbSpec& spec() const noexcept { return spec_; }
  /// dim P / dim M.
  long mu() const noexcept { return spec_.dim_p / spec_.dim_m; }
  /// Euclidean directions at the projected point: lambda_P dim M / dim P.
  long lambda_m() const noexcept {
    return spec_.lambda_p * spec_.dim_m / spec_.dim_p;
  }

 private:
  friend struct PfbValidation;
  explicit ValidatedPfb(PfbSpec spec) : spec_(spec) {}
  PfbSpec spec_;
};

struct PfbValidation {
  std::optional<ValidatedPfb> valid;
  /// One message per violated constraint; empty iff valid.
  std::vector<std::string> errors;

  static PfbValidation run(const PfbSpec& spec);
};

PfbValidation validate_pfb(const PfbSpec& spec);

struct BundleDimensions {
  long vertical = 0;    // dim V_p
  long horizontal = 0;  // dim H_p = dim T_pi(p) M
  long total = 0;       // dim T_p P
};

/// dim V_p = (dim P - dim M)(2 dim P - lambda_P) / dim P, with the
/// horizontal and total tangent dimensions alongside.
BundleDimensions vertical_dimension(const ValidatedPfb& pfb);

/// True iff every sampled point of P is euclidean (lambda = dim P). Throws
/// kInvalidInput on an empty sample.
bool is_classical_pfb(long dim_p, std::span<const long> lambdas);

}  // namespace pseudogeo::fiber
