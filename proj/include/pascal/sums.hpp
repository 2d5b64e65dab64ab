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

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pascal/big_number.hpp"
#include "pascal/core.hpp"

namespace pascal {

/// Residue class of d = n - 2k that selects the +-1 correction.
enum class CorrectionClass {
  kNonPositive,  // d <= 0
  kZeroMod,      // d mod 6 in {0, 3}
  kMinusOne,     // d mod 6 in {1, 2}
  kPlusOne,      // d mod 6 in {4, 5}
};

CorrectionClass classify_correction(std::int64_t d);
const char* to_string(CorrectionClass c);

/// Correction values for d > 0, indexed by d mod 6. The default is the
/// table {0, -1, -1, 0, +1, +1}; other tables exist for mutation testing.
struct CorrectionTable {
  std::array<int, 6> by_residue{0, -1, -1, 0, 1, 1};

  int operator()(std::int64_t d) const;
  bool operator==(const CorrectionTable&) const = default;

  static const CorrectionTable& standard();
  /// Parses six comma-separated integers, e.g. "0,-1,-1,0,1,1".
  static CorrectionTable parse(const std::string& text);
  std::string to_string() const;
};

/// The correction term: 0 for d <= 0, else the six-periodic value above.
int correction_term(std::int64_t d);

/// sum_{i=0..n} C(n, i). n >= 0.
BigNumber horizontal_sum(std::int64_t n);

/// sum_{m=k..n} C(m, k). Requires 0 <= k <= n.
BigNumber hockey_stick_sum(std::int64_t n, std::int64_t k);

/// sum_{j>=0} C(n-j, j). n >= 0.
BigNumber shallow_diagonal_sum(std::int64_t n);

/// Sum along a vertical line of the centered triangle:
/// sum_{j>=0} C(n-2j, k-j), the nonzero terms being j = 0..min(k, n-k).
/// Requires 0 <= k <= n.
BigNumber vertical_partial_sum(std::int64_t n, std::int64_t k);

/// sum_{j>=0} (-1)^j C(n+1-j, k+1+j). Requires 0 <= k <= n.
BigNumber alternating_diagonal_sum(std::int64_t n, std::int64_t k);

/// alternating_diagonal_sum(n, k) + correction_term(n - 2k). Equal to
/// vertical_partial_sum(n, k) on the whole triangle.
BigNumber theorem_rhs(std::int64_t n, std::int64_t k);

}  // namespace pascal
