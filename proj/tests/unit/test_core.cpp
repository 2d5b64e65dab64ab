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

#include <random>
#include <thread>

#include "oracle.hpp"
#include "pascal/core.hpp"

using pascal::BigNumber;
using pascal::CellIndex;

namespace {

std::vector<BigNumber> nums(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("BigNumber arithmetic and text") {
  const auto big = BigNumber::from_string("123456789012345678901234567890");
  CHECK(big.to_string() == "123456789012345678901234567890");
  CHECK((big - big).is_zero());
  CHECK((-big).to_string() == "-123456789012345678901234567890");
  CHECK(BigNumber::from_string("-42") == BigNumber(-42));
  CHECK((big * BigNumber(10)).divide_exact(BigNumber(10)) == big);
  CHECK_THROWS_AS(BigNumber(7).divide_exact(BigNumber(2)), std::domain_error);
  CHECK_THROWS_AS(BigNumber(7).divide_exact(BigNumber(0)), std::domain_error);
  CHECK_THROWS_AS(BigNumber::from_string("12x"), std::invalid_argument);
  CHECK_THROWS_AS(BigNumber::from_string("-"), std::invalid_argument);
  CHECK(BigNumber::power_of_two(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("binomial examples") {
  CHECK(pascal::binomial({5, 2}) == BigNumber(10));
  CHECK(pascal::binomial({7, 0}) == BigNumber(1));
  CHECK(pascal::binomial({4, 7}) == BigNumber(0));
  CHECK(pascal::binomial({30, 15}) == BigNumber(155117520));
}

TEST_CASE("binomial zero convention") {
  CHECK(pascal::binomial({3, -1}).is_zero());
  CHECK(pascal::binomial({-1, 0}).is_zero());
  CHECK(pascal::binomial({-5, -2}).is_zero());
  CHECK(pascal::binomial({0, 0}) == BigNumber(1));
  CHECK(pascal::binomial_multiplicative({2, 3}).is_zero());
}

TEST_CASE("binomial beyond the row cache uses the direct formula") {
  const std::int64_t n = static_cast<std::int64_t>(pascal::TriangleCache::kMaxRows) + 10;
  CHECK(pascal::binomial({n, 2}) == BigNumber(n * (n - 1) / 2));
  CHECK(pascal::binomial({n, n - 1}) == BigNumber(n));
  CHECK(pascal::binomial({n, n + 1}).is_zero());
}

TEST_CASE("row examples") {
  CHECK(pascal::row(0) == nums({1}));
  CHECK(pascal::row(5) == nums({1, 5, 10, 10, 5, 1}));
  CHECK(pascal::row(8) == nums({1, 8, 28, 56, 70, 56, 28, 8, 1}));
  CHECK_THROWS_AS(pascal::row(-1), pascal::UsageError);
}

TEST_CASE("fibonacci and pow2") {
  CHECK(pascal::fibonacci(0) == BigNumber(1));
  CHECK(pascal::fibonacci(1) == BigNumber(1));
  CHECK(pascal::fibonacci(6) == BigNumber(13));
  CHECK(pascal::fibonacci(100) == pascal::oracle::fibonacci(100));
  CHECK_THROWS_AS(pascal::fibonacci(-1), pascal::UsageError);

  CHECK(pascal::pow2(0) == BigNumber(1));
  CHECK(pascal::pow2(5) == BigNumber(32));
  CHECK(pascal::pow2(10) == BigNumber(1024));
  CHECK(pascal::pow2(200) == pascal::oracle::doubling(200));
  CHECK_THROWS_AS(pascal::pow2(-3), pascal::UsageError);
}

TEST_CASE("cached rows agree with factorials") {
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = -1; k <= n + 1; ++k) {
      REQUIRE(pascal::binomial({n, k}) == pascal::oracle::factorial_binomial(n, k));
    }
  }
}

TEST_CASE("triangle invariants up to row 200") {
  constexpr std::int64_t N = 200;
  for (std::int64_t n = 0; n <= N; ++n) {
    BigNumber row_sum;
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto c = pascal::binomial({n, k});
      if (n >= 1) REQUIRE(c == pascal::binomial({n - 1, k - 1}) + pascal::binomial({n - 1, k}));
      REQUIRE(c == pascal::binomial({n, n - k}));
      REQUIRE(c == pascal::binomial_multiplicative({n, k}));
      row_sum += c;
    }
    REQUIRE(row_sum == pascal::pow2(n));
  }
}

TEST_CASE("TriangleCache growth") {
  pascal::TriangleCache cache;
  CHECK(cache.size() == 0);
  CHECK(cache.high_water() == -1);
  CHECK(cache.at(4, 2) == BigNumber(6));
  CHECK(cache.high_water() == 4);
  CHECK(cache.at(2, 5).is_zero());
  CHECK(cache.high_water() == 4);

  const auto r3 = cache.row(3);
  const BigNumber* before = r3.data();
  cache.ensure(600);  // spans several storage chunks
  CHECK(cache.row(3).data() == before);
  CHECK(cache.size() == 601);
  CHECK(cache.at(600, 300) == pascal::binomial_multiplicative({600, 300}));

  pascal::TriangleCache presized(10);
  CHECK(presized.size() == 10);
  CHECK_THROWS_AS(presized.ensure(pascal::TriangleCache::kMaxRows), pascal::UsageError);
}

TEST_CASE("TriangleCache concurrent readers during growth") {
  pascal::TriangleCache cache;
  const pascal::oracle::BruteTriangle oracle(300);
  std::atomic<bool> mismatch{false};
  std::vector<std::jthread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] {
      std::mt19937 rng(static_cast<unsigned>(t));
      for (int i = 0; i < 3000; ++i) {
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 300)(rng);
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(-1, n + 1)(rng);
        if (!(cache.at(n, k) == oracle(n, k))) mismatch = true;
      }
    });
  }
  for (std::size_t n = 0; n <= 300; n += 7) cache.ensure(n);
  readers.clear();
  CHECK_FALSE(mismatch.load());
}
