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

#include "pascal/core.hpp"

#include <algorithm>
#include <utility>

namespace pascal {

TriangleCache::TriangleCache(std::size_t initial_rows) {
  if (initial_rows > 0) ensure(initial_rows - 1);
}

TriangleCache::~TriangleCache() {
  for (auto& chunk : chunks_) delete chunk.load(std::memory_order_relaxed);
}

TriangleCache& TriangleCache::global() {
  static TriangleCache cache;
  return cache;
}

void TriangleCache::ensure(std::size_t n) {
  if (n < size()) return;
  if (n >= kMaxRows) {
    throw UsageError("row " + std::to_string(n) + " exceeds the row cache limit of " +
                     std::to_string(kMaxRows));
  }
  std::lock_guard lock(grow_mutex_);
  std::size_t next = published_.load(std::memory_order_relaxed);
  for (; next <= n; ++next) {
    auto& slot = chunks_[next >> kChunkBits];
    Chunk* chunk = slot.load(std::memory_order_relaxed);
    if (chunk == nullptr) {
      chunk = new Chunk();
      slot.store(chunk, std::memory_order_release);
    }
    Row& out = chunk->rows[next & (kChunkSize - 1)];
    out.reserve(next + 1);
    out.emplace_back(1);
    if (next > 0) {
      const Row& prev = published_row(next - 1);
      for (std::size_t j = 1; j < next; ++j) out.push_back(prev[j - 1] + prev[j]);
      out.emplace_back(1);
    }
    // Published row by row: readers may use row m while later rows are built.
    published_.store(next + 1, std::memory_order_release);
  }
}

std::span<const BigNumber> TriangleCache::row(std::size_t n) {
  ensure(n);
  return published_row(n);
}

const BigNumber& TriangleCache::at(std::int64_t n, std::int64_t k) {
  if (!CellIndex{n, k}.in_triangle()) return zero_value();
  const auto un = static_cast<std::size_t>(n);
  if (un >= size()) ensure(un);
  return published_row(un)[static_cast<std::size_t>(k)];
}

const BigNumber& zero_value() {
  static const BigNumber zero;
  return zero;
}

BigNumber binomial(CellIndex cell) {
  if (!cell.in_triangle()) return {};
  if (static_cast<std::size_t>(cell.n) < TriangleCache::kMaxRows) {
    return TriangleCache::global().at(cell.n, cell.k);
  }
  return binomial_multiplicative(cell);
}

BigNumber binomial_multiplicative(CellIndex cell) {
  if (!cell.in_triangle()) return {};
  const std::int64_t k = std::min(cell.k, cell.n - cell.k);
  BigNumber acc = 1;
  // After step i, acc = C(n-k+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= BigNumber(cell.n - k + i);
    acc = acc.divide_exact(BigNumber(i));
  }
  return acc;
}

std::vector<BigNumber> row(std::int64_t n) {
  if (n < 0) throw UsageError("row index must be non-negative, got " + std::to_string(n));
  auto r = TriangleCache::global().row(static_cast<std::size_t>(n));
  return {r.begin(), r.end()};
}

BigNumber fibonacci(std::int64_t n) {
  if (n < 0) throw UsageError("fibonacci index must be non-negative, got " + std::to_string(n));
  BigNumber prev = 1;
  BigNumber cur = 1;
  for (std::int64_t i = 1; i < n; ++i) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

BigNumber pow2(std::int64_t n) {
  if (n < 0) throw UsageError("pow2 exponent must be non-negative, got " + std::to_string(n));
  return BigNumber::power_of_two(static_cast<std::uint64_t>(n));
}

}  // namespace pascal
