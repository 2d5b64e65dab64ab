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

#include <type_traits>

#include "pascal/dsl.hpp"

namespace pascal::dsl {

namespace {

// Binding strength: sums and differences < products < factors.
int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return b->op == BinaryOp::kMul ? 2 : 1;
  return 3;
}

void print(const Expr& e, std::string& out);

void print_operand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  print(e, out);
  if (parenthesize) out += ')';
}

void print(const Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntegerLiteral>) {
          out += x.value.to_string();
        } else if constexpr (std::is_same_v<T, Binomial>) {
          out += "C(" + pretty_print(x.upper) + ", " + pretty_print(x.lower) + ")";
        } else if constexpr (std::is_same_v<T, FunctionCall>) {
          out += x.function == Function::kFib ? "fib(" : x.function == Function::kPow2 ? "pow2(" : "eps(";
          out += pretty_print(x.argument) + ")";
        } else if constexpr (std::is_same_v<T, AlternatingSign>) {
          out += "(-1)^" + x.index;
        } else if constexpr (std::is_same_v<T, Summation>) {
          out += "sum " + x.index + " [ ";
          print(*x.body, out);
          out += " ]";
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = x.op == BinaryOp::kMul ? 2 : 1;
          // Left-associative: the right operand needs parentheses at equal
          // precedence to keep its grouping.
          print_operand(*x.lhs, precedence(*x.lhs) < p, out);
          out += x.op == BinaryOp::kAdd ? " + " : x.op == BinaryOp::kSub ? " - " : " * ";
          print_operand(*x.rhs, precedence(*x.rhs) <= p, out);
        } else {
          out += '-';
          print_operand(*x.operand, precedence(*x.operand) < 3, out);
        }
      },
      e.node);
}

void append_term(std::string& out, std::int64_t coefficient, const std::string& variable, bool first) {
  // The magnitude is printed unsigned so INT64_MIN survives.
  const bool negative = coefficient < 0;
  const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(coefficient) : static_cast<std::uint64_t>(coefficient);
  if (negative) {
    out += '-';
  } else if (!first) {
    out += '+';
  }
  if (variable.empty()) {
    out += std::to_string(magnitude);
  } else {
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += variable;
  }
}

}  // namespace

std::string pretty_print(const AffineExpr& affine) {
  std::string out;
  bool first = true;
  for (const auto& t : affine.terms) {
    append_term(out, t.coefficient, t.variable, first);
    first = false;
  }
  if (first || affine.constant != 0) append_term(out, affine.constant, "", first);
  return out;
}

std::string pretty_print(const Expr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

std::string pretty_print(const Identity& identity) {
  return pretty_print(*identity.lhs) + " == " + pretty_print(*identity.rhs);
}

}  // namespace pascal::dsl
