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

#include <algorithm>
#include <array>
#include <type_traits>

#include "pascal/dsl.hpp"

namespace pascal::dsl {

namespace {

constexpr std::size_t kMaxSlots = 64;

class Evaluator {
 public:
  Evaluator(std::int64_t n, std::int64_t k, const EvalOptions& options)
      : options_(options), cache_(TriangleCache::global()) {
    slots_[kSlotN] = n;
    slots_[kSlotK] = k;
    bound_ = checked_add(checked_add(std::max<std::int64_t>(n, 0), std::max<std::int64_t>(k, 0)), 2);
  }

  BigNumber eval(const Expr& e) {
    return std::visit(
        [this, &e](const auto& x) -> BigNumber {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntegerLiteral>) {
            return x.value;
          } else if constexpr (std::is_same_v<T, Binomial>) {
            BigNumber scratch;
            return *binomial(x, scratch);
          } else if constexpr (std::is_same_v<T, FunctionCall>) {
            return call(x);
          } else if constexpr (std::is_same_v<T, AlternatingSign>) {
            return BigNumber(slots_[static_cast<std::size_t>(x.slot)] % 2 == 0 ? 1 : -1);
          } else if constexpr (std::is_same_v<T, Summation>) {
            return summation(x);
          } else if constexpr (std::is_same_v<T, Binary>) {
            if (x.op == BinaryOp::kMul) return eval(*x.lhs) * eval(*x.rhs);
            BigNumber acc;
            accumulate(e, acc, false);
            return acc;
          } else {
            BigNumber v = eval(*x.operand);
            v.negate();
            return v;
          }
        },
        e.node);
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw EvaluationError("integer overflow in index expression");
    return r;
  }

  std::int64_t affine(const AffineExpr& a) const {
    std::int64_t v = a.constant;
    for (const auto& t : a.terms) {
      std::int64_t product = 0;
      if (__builtin_mul_overflow(t.coefficient, slots_[static_cast<std::size_t>(t.slot)], &product)) {
        throw EvaluationError("integer overflow in index expression");
      }
      v = checked_add(v, product);
    }
    return v;
  }

  // Points either into the row cache or at `scratch`.
  const BigNumber* binomial(const Binomial& b, BigNumber& scratch) {
    const std::int64_t upper = affine(b.upper);
    const std::int64_t lower = affine(b.lower);
    if (!CellIndex{upper, lower}.in_triangle()) return &zero_value();
    if (static_cast<std::size_t>(upper) < TriangleCache::kMaxRows) return &cache_.at(upper, lower);
    if (std::min(lower, upper - lower) > static_cast<std::int64_t>(TriangleCache::kMaxRows)) {
      throw EvaluationError("binomial C(" + std::to_string(upper) + ", " + std::to_string(lower) +
                            ") is too large to evaluate");
    }
    scratch = binomial_multiplicative({upper, lower});
    return &scratch;
  }

  BigNumber call(const FunctionCall& c) const {
    const std::int64_t arg = affine(c.argument);
    if (c.function == Function::kEps) return BigNumber(options_.correction(arg));
    if (arg < 0) return {};
    if (arg > kMaxFunctionArgument) {
      throw EvaluationError(std::string(c.function == Function::kFib ? "fib" : "pow2") + " argument " +
                            std::to_string(arg) + " exceeds " + std::to_string(kMaxFunctionArgument));
    }
    return c.function == Function::kFib ? fibonacci(arg) : pow2(arg);
  }

  BigNumber summation(const Summation& s) {
    const auto slot = static_cast<std::size_t>(s.slot);
    if (slot >= kMaxSlots) throw EvaluationError("summations nested too deeply");
    BigNumber acc;
    for (std::int64_t j = 0; j < bound_; ++j) {
      slots_[slot] = j;
      accumulate(*s.body, acc, false);
    }
    slots_[slot] = bound_;
    if (!eval(*s.body).is_zero()) throw NonTerminatingSum(s.index, bound_);
    return acc;
  }

  // acc += (negated ? -1 : 1) * e, without materializing e where possible.
  void accumulate(const Expr& e, BigNumber& acc, bool negated) {
    if (const auto* b = std::get_if<Binomial>(&e.node)) {
      BigNumber scratch;
      const BigNumber* v = binomial(*b, scratch);
      if (v->is_zero()) return;
      if (negated) {
        acc -= *v;
      } else {
        acc += *v;
      }
      return;
    }
    if (const auto* bin = std::get_if<Binary>(&e.node)) {
      switch (bin->op) {
        case BinaryOp::kAdd:
          accumulate(*bin->lhs, acc, negated);
          accumulate(*bin->rhs, acc, negated);
          return;
        case BinaryOp::kSub:
          accumulate(*bin->lhs, acc, negated);
          accumulate(*bin->rhs, acc, !negated);
          return;
        case BinaryOp::kMul:
          if (const auto* s = std::get_if<AlternatingSign>(&bin->lhs->node)) {
            accumulate(*bin->rhs, acc, negated != is_odd(*s));
            return;
          }
          if (const auto* s = std::get_if<AlternatingSign>(&bin->rhs->node)) {
            accumulate(*bin->lhs, acc, negated != is_odd(*s));
            return;
          }
          break;
      }
    } else if (const auto* neg = std::get_if<Negate>(&e.node)) {
      accumulate(*neg->operand, acc, !negated);
      return;
    }
    BigNumber v = eval(e);
    if (negated) {
      acc -= v;
    } else {
      acc += v;
    }
  }

  bool is_odd(const AlternatingSign& s) const { return slots_[static_cast<std::size_t>(s.slot)] % 2 != 0; }

  const EvalOptions& options_;
  TriangleCache& cache_;
  std::array<std::int64_t, kMaxSlots> slots_{};
  std::int64_t bound_ = 0;
};

}  // namespace

BigNumber evaluate(const Expr& expr, const Bindings& bindings, const EvalOptions& options) {
  if (!bindings.n && references_parameter(expr, kSlotN)) throw EvaluationError("parameter n is not bound");
  if (!bindings.k && references_parameter(expr, kSlotK)) throw EvaluationError("parameter k is not bound");
  return Evaluator(bindings.n.value_or(0), bindings.k.value_or(0), options).eval(expr);
}

BigNumber evaluate(const Expr& expr, CellIndex cell, const EvalOptions& options) {
  return Evaluator(cell.n, cell.k, options).eval(expr);
}

}  // namespace pascal::dsl
