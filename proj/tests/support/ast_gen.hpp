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

#include <random>
#include <string>
#include <vector>

#include "pascal/dsl.hpp"

namespace pascal::testing {

/// Random well-formed ASTs: canonical affine indices, non-negative
/// literals, signs only inside summations, distinct index names.
class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  dsl::ExprPtr expr(int depth = 4) { return gen(depth); }

  dsl::Identity identity(int depth = 3) { return {gen(depth), gen(depth)}; }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  dsl::AffineExpr affine() {
    dsl::AffineExpr a;
    a.constant = pick(-5, 5);
    // Variables in slot order, which is the canonical order.
    std::vector<std::pair<std::string, int>> vars{{"n", dsl::kSlotN}, {"k", dsl::kSlotK}};
    for (std::size_t d = 0; d < scope_.size(); ++d) vars.emplace_back(scope_[d], dsl::kFirstIndexSlot + static_cast<int>(d));
    for (const auto& [name, slot] : vars) {
      if (pick(0, 2) != 0) continue;
      int coefficient = pick(-3, 3);
      if (coefficient == 0) coefficient = 1;
      a.terms.push_back({name, coefficient, slot});
    }
    return a;
  }

  dsl::ExprPtr leaf() {
    const int choice = pick(0, scope_.empty() ? 4 : 5);
    switch (choice) {
      case 0: return dsl::make_integer(BigNumber(pick(0, 40)));
      case 1: return dsl::make_binomial(affine(), affine());
      case 2: return dsl::make_call(dsl::Function::kFib, affine());
      case 3: return dsl::make_call(dsl::Function::kPow2, affine());
      case 4: return dsl::make_call(dsl::Function::kEps, affine());
      default: {
        const auto d = static_cast<std::size_t>(pick(0, static_cast<int>(scope_.size()) - 1));
        return dsl::make_sign(scope_[d], dsl::kFirstIndexSlot + static_cast<int>(d));
      }
    }
  }

  dsl::ExprPtr gen(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(0, 6)) {
      case 0: return dsl::make_binary(dsl::BinaryOp::kAdd, gen(depth - 1), gen(depth - 1));
      case 1: return dsl::make_binary(dsl::BinaryOp::kSub, gen(depth - 1), gen(depth - 1));
      case 2: return dsl::make_binary(dsl::BinaryOp::kMul, gen(depth - 1), gen(depth - 1));
      case 3: return dsl::make_negate(gen(depth - 1));
      case 4: {
        if (scope_.size() >= 3) return leaf();
        const std::string name = std::string(1, "ijm"[scope_.size()]);
        const int slot = dsl::kFirstIndexSlot + static_cast<int>(scope_.size());
        scope_.push_back(name);
        auto body = gen(depth - 1);
        scope_.pop_back();
        return dsl::make_sum(name, slot, std::move(body));
      }
      default: return leaf();
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> scope_;
};

}  // namespace pascal::testing
