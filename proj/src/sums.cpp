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

#include "pascal/sums.hpp"

#include <algorithm>
#include <sstream>

namespace pascal {

namespace {

std::int64_t positive_residue(std::int64_t d) { return ((d % 6) + 6) % 6; }

void require_non_negative(std::int64_t n, const char* what) {
  if (n < 0) throw UsageError(std::string(what) + ": n must be non-negative, got " + std::to_string(n));
}

void require_in_triangle(std::int64_t n, std::int64_t k, const char* what) {
  if (!CellIndex{n, k}.in_triangle()) {
    throw UsageError(std::string(what) + ": (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) +
                     ") is outside 0 <= k <= n");
  }
}

}  // namespace

CorrectionClass classify_correction(std::int64_t d) {
  if (d <= 0) return CorrectionClass::kNonPositive;
  switch (positive_residue(d)) {
    case 0:
    case 3:
      return CorrectionClass::kZeroMod;
    case 1:
    case 2:
      return CorrectionClass::kMinusOne;
    default:
      return CorrectionClass::kPlusOne;
  }
}

const char* to_string(CorrectionClass c) {
  switch (c) {
    case CorrectionClass::kNonPositive:
      return "NONPOSITIVE";
    case CorrectionClass::kZeroMod:
      return "ZERO_MOD";
    case CorrectionClass::kMinusOne:
      return "MINUS_ONE";
    case CorrectionClass::kPlusOne:
      return "PLUS_ONE";
  }
  return "?";
}

int CorrectionTable::operator()(std::int64_t d) const {
  if (d <= 0) return 0;
  return by_residue[static_cast<std::size_t>(positive_residue(d))];
}

const CorrectionTable& CorrectionTable::standard() {
  static const CorrectionTable table;
  return table;
}

CorrectionTable CorrectionTable::parse(const std::string& text) {
  CorrectionTable table;
  std::istringstream in(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == table.by_residue.size()) throw UsageError("correction table needs exactly six entries");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid correction table entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("invalid correction table entry '" + item + "'");
    table.by_residue[i++] = v;
  }
  if (i != table.by_residue.size()) throw UsageError("correction table needs exactly six entries");
  return table;
}

std::string CorrectionTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < by_residue.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(by_residue[i]);
  }
  return out;
}

int correction_term(std::int64_t d) { return CorrectionTable::standard()(d); }

BigNumber horizontal_sum(std::int64_t n) {
  require_non_negative(n, "horizontal_sum");
  BigNumber total;
  for (const auto& v : TriangleCache::global().row(static_cast<std::size_t>(n))) total += v;
  return total;
}

BigNumber hockey_stick_sum(std::int64_t n, std::int64_t k) {
  require_in_triangle(n, k, "hockey_stick_sum");
  auto& cache = TriangleCache::global();
  cache.ensure(static_cast<std::size_t>(n));
  BigNumber total;
  for (std::int64_t m = k; m <= n; ++m) total += cache.at(m, k);
  return total;
}

BigNumber shallow_diagonal_sum(std::int64_t n) {
  require_non_negative(n, "shallow_diagonal_sum");
  auto& cache = TriangleCache::global();
  cache.ensure(static_cast<std::size_t>(n));
  BigNumber total;
  for (std::int64_t j = 0; j <= n - j; ++j) total += cache.at(n - j, j);
  return total;
}

BigNumber vertical_partial_sum(std::int64_t n, std::int64_t k) {
  require_in_triangle(n, k, "vertical_partial_sum");
  auto& cache = TriangleCache::global();
  cache.ensure(static_cast<std::size_t>(n));
  BigNumber total;
  const std::int64_t last = std::min(k, n - k);
  for (std::int64_t j = 0; j <= last; ++j) total += cache.at(n - 2 * j, k - j);
  return total;
}

BigNumber alternating_diagonal_sum(std::int64_t n, std::int64_t k) {
  require_in_triangle(n, k, "alternating_diagonal_sum");
  auto& cache = TriangleCache::global();
  cache.ensure(static_cast<std::size_t>(n + 1));
  BigNumber total;
  // Term j is nonzero iff k+1+j <= n+1-j.
  for (std::int64_t j = 0; 2 * j <= n - k; ++j) {
    const BigNumber& term = cache.at(n + 1 - j, k + 1 + j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigNumber theorem_rhs(std::int64_t n, std::int64_t k) {
  require_in_triangle(n, k, "theorem_rhs");
  return alternating_diagonal_sum(n, k) + BigNumber(correction_term(n - 2 * k));
}

}  // namespace pascal
