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
#include <type_traits>
#include <utility>

#include "pascal/dsl.hpp"

namespace pascal::dsl {

SyntaxError::SyntaxError(std::size_t offset_, std::string expected_, std::string found)
    : Error("syntax error at offset " + std::to_string(offset_) + ": expected " + expected_ + ", found " +
            found),
      offset(offset_),
      expected(std::move(expected_)) {}

UnboundVariable::UnboundVariable(std::string name_, std::size_t offset_)
    : Error("unbound variable '" + name_ + "' at offset " + std::to_string(offset_)),
      name(std::move(name_)),
      offset(offset_) {}

ShadowedIndex::ShadowedIndex(std::string name_, std::size_t offset_)
    : Error("summation index '" + name_ + "' at offset " + std::to_string(offset_) +
            " shadows a parameter or an enclosing index"),
      name(std::move(name_)),
      offset(offset_) {}

NonTerminatingSum::NonTerminatingSum(std::string index_, std::int64_t bound_)
    : Error("non-terminating sum over '" + index_ + "': term at safe bound " + std::to_string(bound_) +
            " is nonzero"),
      index(std::move(index_)),
      bound(bound_) {}

ExprPtr make_integer(BigNumber value) { return std::make_shared<const Expr>(Expr{IntegerLiteral{std::move(value)}}); }

ExprPtr make_binomial(AffineExpr upper, AffineExpr lower) {
  return std::make_shared<const Expr>(Expr{Binomial{std::move(upper), std::move(lower)}});
}

ExprPtr make_call(Function function, AffineExpr argument) {
  return std::make_shared<const Expr>(Expr{FunctionCall{function, std::move(argument)}});
}

ExprPtr make_sign(std::string index, int slot) {
  return std::make_shared<const Expr>(Expr{AlternatingSign{std::move(index), slot}});
}

ExprPtr make_sum(std::string index, int slot, ExprPtr body) {
  return std::make_shared<const Expr>(Expr{Summation{std::move(index), slot, std::move(body)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_negate(ExprPtr operand) { return std::make_shared<const Expr>(Expr{Negate{std::move(operand)}}); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Summation>) {
          return x.index == y.index && *x.body == *y.body;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return *x.operand == *y.operand;
        } else {
          return x == y;
        }
      },
      a.node);
}

bool operator==(const Identity& a, const Identity& b) { return *a.lhs == *b.lhs && *a.rhs == *b.rhs; }

namespace {

bool affine_references(const AffineExpr& e, int slot) {
  return std::any_of(e.terms.begin(), e.terms.end(), [slot](const AffineTerm& t) { return t.slot == slot; });
}

}  // namespace

bool references_parameter(const Expr& expr, int slot) {
  return std::visit(
      [slot](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Binomial>) {
          return affine_references(x.upper, slot) || affine_references(x.lower, slot);
        } else if constexpr (std::is_same_v<T, FunctionCall>) {
          return affine_references(x.argument, slot);
        } else if constexpr (std::is_same_v<T, Summation>) {
          return references_parameter(*x.body, slot);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return references_parameter(*x.lhs, slot) || references_parameter(*x.rhs, slot);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return references_parameter(*x.operand, slot);
        } else {
          return false;
        }
      },
      expr.node);
}

bool Identity::uses_k() const { return references_parameter(*lhs, kSlotK) || references_parameter(*rhs, kSlotK); }

}  // namespace pascal::dsl
