// Copyright 2026 The pascal-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "oracle.hpp"
#include "pascal/sums.hpp"

using pascal::BigNumber;

TEST_CASE("horizontal_sum") {
  CHECK(pascal::horizontal_sum(0) == BigNumber(1));
  CHECK(pascal::horizontal_sum(5) == BigNumber(32));
  CHECK(pascal::horizontal_sum(8) == BigNumber(256));
  CHECK_THROWS_AS(pascal::horizontal_sum(-1), pascal::UsageError);
}

TEST_CASE("hockey_stick_sum") {
  CHECK(pascal::hockey_stick_sum(4, 2) == BigNumber(10));
  for (std::int64_t k = 0; k < 10; ++k) CHECK(pascal::hockey_stick_sum(k, k) == BigNumber(1));
  CHECK(pascal::hockey_stick_sum(6, 1) == BigNumber(21));
  CHECK_THROWS_AS(pascal::hockey_stick_sum(3, 4), pascal::UsageError);
  CHECK_THROWS_AS(pascal::hockey_stick_sum(3, -1), pascal::UsageError);
}

TEST_CASE("shallow_diagonal_sum") {
  CHECK(pascal::shallow_diagonal_sum(0) == BigNumber(1));
  CHECK(pascal::shallow_diagonal_sum(5) == BigNumber(8));
  CHECK(pascal::shallow_diagonal_sum(6) == BigNumber(13));
  CHECK_THROWS_AS(pascal::shallow_diagonal_sum(-2), pascal::UsageError);
}

TEST_CASE("vertical_partial_sum") {
  for (std::int64_t n = 0; n < 12; ++n) CHECK(pascal::vertical_partial_sum(n, 0) == BigNumber(1));
  CHECK(pascal::vertical_partial_sum(6, 2) == BigNumber(20));
  CHECK(pascal::vertical_partial_sum(4, 2) == BigNumber(9));
  CHECK(pascal::vertical_partial_sum(2, 1) == BigNumber(3));
  CHECK_THROWS_AS(pascal::vertical_partial_sum(2, 3), pascal::UsageError);
  CHECK_THROWS_AS(pascal::vertical_partial_sum(-1, 0), pascal::UsageError);
}

TEST_CASE("alternating_diagonal_sum") {
  for (std::int64_t n = 0; n < 12; ++n) CHECK(pascal::alternating_diagonal_sum(n, n) == BigNumber(1));
  CHECK(pascal::alternating_diagonal_sum(6, 2) == BigNumber(21));
  CHECK(pascal::alternating_diagonal_sum(5, 2) == BigNumber(15));
  CHECK(pascal::alternating_diagonal_sum(4, 0) == BigNumber(0));
  CHECK_THROWS_AS(pascal::alternating_diagonal_sum(1, 2), pascal::UsageError);
}

TEST_CASE("correction_term case table") {
  CHECK(pascal::correction_term(0) == 0);
  CHECK(pascal::correction_term(-3) == 0);
  CHECK(pascal::correction_term(1) == -1);
  CHECK(pascal::correction_term(2) == -1);
  CHECK(pascal::correction_term(4) == 1);
  CHECK(pascal::correction_term(5) == 1);
  CHECK(pascal::correction_term(6) == 0);
  CHECK(pascal::correction_term(9) == 0);
  for (std::int64_t d = -50; d <= 200; ++d) REQUIRE(pascal::correction_term(d) == pascal::oracle::correction(d));
}

TEST_CASE("CorrectionClass") {
  using pascal::CorrectionClass;
  CHECK(pascal::classify_correction(0) == CorrectionClass::kNonPositive);
  CHECK(pascal::classify_correction(-7) == CorrectionClass::kNonPositive);
  CHECK(pascal::classify_correction(3) == CorrectionClass::kZeroMod);
  CHECK(pascal::classify_correction(12) == CorrectionClass::kZeroMod);
  CHECK(pascal::classify_correction(7) == CorrectionClass::kMinusOne);
  CHECK(pascal::classify_correction(11) == CorrectionClass::kPlusOne);
  CHECK(std::string(pascal::to_string(CorrectionClass::kPlusOne)) == "PLUS_ONE");
  // The class determines the value.
  for (std::int64_t d = -20; d <= 60; ++d) {
    const int expected = [&] {
      switch (pascal::classify_correction(d)) {
        case CorrectionClass::kMinusOne: return -1;
        case CorrectionClass::kPlusOne: return 1;
        default: return 0;
      }
    }();
    REQUIRE(pascal::correction_term(d) == expected);
  }
}

TEST_CASE("CorrectionTable parsing") {
  using pascal::CorrectionTable;
  CHECK(CorrectionTable::parse("0,-1,-1,0,1,1") == CorrectionTable::standard());
  CHECK(CorrectionTable::standard().to_string() == "0,-1,-1,0,1,1");
  const auto negated = CorrectionTable::parse("0,1,1,0,-1,-1");
  CHECK(negated(1) == 1);
  CHECK(negated(0) == 0);
  CHECK(negated(-1) == 0);
  CHECK_THROWS_AS(CorrectionTable::parse("0,1,1"), pascal::UsageError);
  CHECK_THROWS_AS(CorrectionTable::parse("0,1,1,0,1,1,0"), pascal::UsageError);
  CHECK_THROWS_AS(CorrectionTable::parse("0,1,x,0,1,1"), pascal::UsageError);
}

TEST_CASE("theorem_rhs examples") {
  CHECK(pascal::theorem_rhs(6, 2) == BigNumber(20));
  CHECK(pascal::theorem_rhs(5, 2) == BigNumber(14));
  CHECK(pascal::theorem_rhs(4, 2) == BigNumber(9));
  CHECK(pascal::theorem_rhs(6, 1) == BigNumber(7));
  CHECK(pascal::theorem_rhs(4, 0) == BigNumber(1));
}

TEST_CASE("sums agree with brute-force summation") {
  const pascal::oracle::BruteTriangle c(61);
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      REQUIRE(pascal::vertical_partial_sum(n, k) == pascal::oracle::vertical(c, n, k));
      REQUIRE(pascal::alternating_diagonal_sum(n, k) == pascal::oracle::alternating(c, n, k));
    }
  }
}

TEST_CASE("vertical sum equals the corrected alternating sum up to n = 300") {
  for (std::int64_t n = 0; n <= 300; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) REQUIRE(pascal::vertical_partial_sum(n, k) == pascal::theorem_rhs(n, k));
  }
}

TEST_CASE("classical identities up to n = 300") {
  for (std::int64_t n = 0; n <= 300; ++n) {
    REQUIRE(pascal::horizontal_sum(n) == pascal::pow2(n));
    REQUIRE(pascal::shallow_diagonal_sum(n) == pascal::fibonacci(n));
    for (std::int64_t k = 0; k <= n; ++k) {
      REQUIRE(pascal::hockey_stick_sum(n, k) == pascal::binomial({n + 1, k + 1}));
    }
  }
}

TEST_CASE("correction recurrence") {
  for (std::int64_t d = -300; d <= 300; ++d) {
    const int expected = pascal::correction_term(d - 1) + pascal::correction_term(d + 1) + (d == 0 ? 1 : 0);
    REQUIRE(pascal::correction_term(d) == expected);
  }
}

TEST_CASE("alternating sum obeys the plain recurrence off the edges") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t k = 1; k <= n - 1; ++k) {
      REQUIRE(pascal::alternating_diagonal_sum(n, k) ==
              pascal::alternating_diagonal_sum(n - 1, k) + pascal::alternating_diagonal_sum(n - 1, k - 1));
    }
  }
}
