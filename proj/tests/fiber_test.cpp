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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "pseudogeo/error.hpp"
#include "pseudogeo/fiber.hpp"

using namespace pseudogeo;
using namespace pseudogeo::fiber;

namespace {

// Tangent dimension of a point with lambda euclidean directions out of d.
long tangent_dim(long d, long lambda) { return 2 * d - lambda; }

// Independent vertical dimension: dim T_p P minus dim T_pi(p) M.
std::optional<long> oracle_vertical(long dp, long dm, long lambda) {
  if (dm < 1 || dp <= dm || lambda < 0 || lambda > dp) return std::nullopt;
  if (dp % dm != 0 || (lambda * dm) % dp != 0) return std::nullopt;
  return tangent_dim(dp, lambda) - tangent_dim(dm, lambda * dm / dp);
}

}  // namespace

TEST_CASE("validation examples") {
  const auto ok = validate_pfb({6, 3, 3, 6});
  REQUIRE(ok.valid);
  CHECK(ok.valid->mu() == 2);
  CHECK(ok.valid->lambda_m() == 3);
  CHECK(ok.errors.empty());

  const auto bad_mu = validate_pfb({5, 3, 2, 0});
  CHECK_FALSE(bad_mu.valid);
  REQUIRE(bad_mu.errors.size() == 1);
  CHECK(bad_mu.errors[0].find("mu") != std::string::npos);

  const auto bad_lambda = validate_pfb({4, 2, 2, 3});
  CHECK_FALSE(bad_lambda.valid);
  REQUIRE(bad_lambda.errors.size() == 1);
  CHECK(bad_lambda.errors[0].find("lambda_M") != std::string::npos);

  // Every violated constraint is listed.
  CHECK(validate_pfb({2, 3, -1, 7}).errors.size() == 3);
}

TEST_CASE("vertical dimension examples") {
  const auto d = vertical_dimension(*validate_pfb({6, 3, 3, 6}).valid);
  CHECK(d.vertical == 3);
  CHECK(d.horizontal == 3);
  CHECK(d.total == 6);

  const auto e = vertical_dimension(*validate_pfb({6, 3, 3, 0}).valid);
  CHECK(e.vertical == 6);
  CHECK(e.total == 12);
  CHECK(e.horizontal == 6);
}

TEST_CASE("classical bundle criterion") {
  const std::vector<long> all{4, 4, 4};
  const std::vector<long> one_short{4, 3, 4};
  CHECK(is_classical_pfb(4, all));
  CHECK_FALSE(is_classical_pfb(4, one_short));
  CHECK_THROWS_AS(is_classical_pfb(4, std::vector<long>{}), Error);
}

TEST_CASE("property: exhaustive grid against the oracle for dim P <= 12") {
  int validated = 0;
  for (long dp = 0; dp <= 12; ++dp) {
    for (long dm = 0; dm <= dp + 1; ++dm) {
      std::optional<long> previous;
      for (long lambda = -1; lambda <= dp + 1; ++lambda) {
        const auto v = validate_pfb({dp, dm, dp - dm, lambda});
        const auto expect = oracle_vertical(dp, dm, lambda);
        REQUIRE(v.valid.has_value() == expect.has_value());
        CHECK(v.errors.empty() == expect.has_value());
        if (!expect) continue;
        ++validated;
        const auto d = vertical_dimension(*v.valid);
        CHECK(d.vertical == *expect);
        CHECK(d.total == d.horizontal + d.vertical);
        // Euclidean point iff the vertical part is dim P - dim M.
        CHECK((d.vertical == dp - dm) == (lambda == dp));
        // Nonincreasing in lambda.
        if (previous) CHECK(d.vertical <= *previous);
        previous = d.vertical;
      }
    }
  }
  CHECK(validated > 50);
}
