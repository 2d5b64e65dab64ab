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
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal/big_number.hpp"

namespace pascal {

/// Raised when an operation is called outside its documented domain,
/// e.g. a negative row index.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Address of a triangle cell. Any pair of integers is a valid index;
/// the cell is "in the triangle" when 0 <= k <= n.
struct CellIndex {
  std::int64_t n = 0;
  std::int64_t k = 0;

  bool in_triangle() const { return n >= 0 && k >= 0 && k <= n; }
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Append-only store of Pascal triangle rows.
///
/// Rows are generated with the additive recurrence and published in order.
/// A published row never moves or changes, so readers hold plain references
/// to it without locking. Growth is serialized by a mutex; reads of rows
/// below `size()` are wait-free.
class TriangleCache {
 public:
  using Row = std::vector<BigNumber>;

  /// Largest number of rows a cache will hold. Binomials beyond this row are
  /// computed directly instead (see `binomial`).
  static constexpr std::size_t kMaxRows = std::size_t{1} << 16;

  explicit TriangleCache(std::size_t initial_rows = 0);
  ~TriangleCache();
  TriangleCache(const TriangleCache&) = delete;
  TriangleCache& operator=(const TriangleCache&) = delete;

  /// Process-wide cache shared by the free functions below.
  static TriangleCache& global();

  /// Makes rows 0..n available. Throws UsageError if n >= kMaxRows.
  void ensure(std::size_t n);

  /// Row n, generating it (and every row before it) on demand.
  std::span<const BigNumber> row(std::size_t n);

  /// C(n, k) with the zero convention. Rows are generated on demand; n must
  /// be below kMaxRows when 0 <= k <= n.
  const BigNumber& at(std::int64_t n, std::int64_t k);

  /// Number of published rows.
  std::size_t size() const { return published_.load(std::memory_order_acquire); }

  /// Index of the highest published row, or -1 when empty.
  std::int64_t high_water() const { return static_cast<std::int64_t>(size()) - 1; }

 private:
  static constexpr std::size_t kChunkBits = 8;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = kMaxRows / kChunkSize;

  struct Chunk {
    std::array<Row, kChunkSize> rows;
  };

  const Row& published_row(std::size_t n) const {
    return chunks_[n >> kChunkBits].load(std::memory_order_acquire)->rows[n & (kChunkSize - 1)];
  }

  std::array<std::atomic<Chunk*>, kMaxChunks> chunks_{};
  std::atomic<std::size_t> published_{0};
  std::mutex grow_mutex_;
};

/// Zero returned by reference for out-of-triangle cells.
const BigNumber& zero_value();

/// C(n, k) for any integers; 0 when k < 0, k > n or n < 0.
BigNumber binomial(CellIndex cell);

/// C(n, k) by the multiplicative formula prod_{i=1..k} (n-k+i)/i with exact
/// division at every step. Independent of the row cache.
BigNumber binomial_multiplicative(CellIndex cell);

/// [C(n,0), ..., C(n,n)]. Throws UsageError for n < 0.
std::vector<BigNumber> row(std::int64_t n);

/// Fibonacci numbers u_0 = u_1 = 1, u_{m+2} = u_{m+1} + u_m.
/// Throws UsageError for n < 0.
BigNumber fibonacci(std::int64_t n);

/// 2^n. Throws UsageError for n < 0.
BigNumber pow2(std::int64_t n);

}  // namespace pascal
