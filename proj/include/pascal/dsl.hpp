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

/// \file
/// Lattice-sum expression language.
///
/// Grammar (whitespace-insensitive):
///
///     identity   = expr "==" expr ;
///     expr       = term { ("+" | "-") term } ;
///     term       = factor { "*" factor } ;
///     factor     = integer | "-" factor | builtin | summation | signfactor
///                | "(" expr ")" ;
///     builtin    = "C" "(" affine "," affine ")" | "fib" "(" affine ")"
///                | "pow2" "(" affine ")" | "eps" "(" affine ")" ;
///     summation  = "sum" identifier "[" expr "]" ;
///     signfactor = "(-1)^" identifier ;
///     affine     = ["-"] affineterm { ("+" | "-") affineterm } ;
///     affineterm = integer | identifier | integer "*" identifier ;
///
/// The free parameters are `n` and `k`; every other identifier must be the
/// index of an enclosing `sum`. A summation runs its index from 0 upward and
/// relies on its terms vanishing (see `evaluate`).

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pascal/big_number.hpp"
#include "pascal/core.hpp"
#include "pascal/sums.hpp"

namespace pascal::dsl {

// ---------------------------------------------------------------- errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalCharacter : public Error {
 public:
  IllegalCharacter(std::size_t offset, char c);
  std::size_t offset;
  char character;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected, std::string found);
  std::size_t offset;
  std::string expected;
};

class UnboundVariable : public Error {
 public:
  UnboundVariable(std::string name, std::size_t offset);
  std::string name;
  std::size_t offset;
};

class ShadowedIndex : public Error {
 public:
  ShadowedIndex(std::string name, std::size_t offset);
  std::string name;
  std::size_t offset;
};

/// A summation whose term at the safe bound is nonzero.
class NonTerminatingSum : public Error {
 public:
  NonTerminatingSum(std::string index, std::int64_t bound);
  std::string index;
  std::int64_t bound;
};

/// Evaluation outside what the evaluator supports: integer overflow in an
/// index, an argument too large to materialize, or an unbound parameter.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------- tokens

enum class TokenKind {
  kIdentifier,
  kInteger,
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kEqualEqual,
  kBinomial,  // C
  kFib,
  kPow2,
  kEps,
  kSum,
  kEnd,
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
};

/// Splits `source` into tokens. The result always ends with a kEnd token.
std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------- AST

/// Variable slots: 0 is n, 1 is k, 2 + d is the index of the sum at
/// nesting depth d.
inline constexpr int kSlotN = 0;
inline constexpr int kSlotK = 1;
inline constexpr int kFirstIndexSlot = 2;

struct AffineTerm {
  std::string variable;
  std::int64_t coefficient = 0;
  int slot = 0;

  /// Slots are derived from names and scope, so they are not compared.
  bool operator==(const AffineTerm& o) const {
    return variable == o.variable && coefficient == o.coefficient;
  }
};

/// constant + sum of coefficient * variable. Canonical form: no zero
/// coefficients, one term per variable, terms ordered by slot.
struct AffineExpr {
  std::int64_t constant = 0;
  std::vector<AffineTerm> terms;

  bool operator==(const AffineExpr&) const = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntegerLiteral {
  BigNumber value;
  bool operator==(const IntegerLiteral&) const = default;
};

struct Binomial {
  AffineExpr upper;
  AffineExpr lower;
  bool operator==(const Binomial&) const = default;
};

enum class Function { kFib, kPow2, kEps };

struct FunctionCall {
  Function function;
  AffineExpr argument;
  bool operator==(const FunctionCall&) const = default;
};

/// (-1)^index
struct AlternatingSign {
  std::string index;
  int slot = kFirstIndexSlot;
  bool operator==(const AlternatingSign& o) const { return index == o.index; }
};

struct Summation {
  std::string index;
  int slot = kFirstIndexSlot;
  ExprPtr body;
};

enum class BinaryOp { kAdd, kSub, kMul };

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Negate {
  ExprPtr operand;
};

struct Expr {
  std::variant<IntegerLiteral, Binomial, FunctionCall, AlternatingSign, Summation, Binary, Negate> node;
};

/// Structural equality (variable names, coefficients, shape).
bool operator==(const Expr& a, const Expr& b);

ExprPtr make_integer(BigNumber value);
ExprPtr make_binomial(AffineExpr upper, AffineExpr lower);
ExprPtr make_call(Function function, AffineExpr argument);
ExprPtr make_sign(std::string index, int slot);
ExprPtr make_sum(std::string index, int slot, ExprPtr body);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_negate(ExprPtr operand);

/// Both sides share the free parameters n and k.
struct Identity {
  ExprPtr lhs;
  ExprPtr rhs;

  /// True when either side mentions k.
  bool uses_k() const;
};

bool operator==(const Identity& a, const Identity& b);

/// True when `expr` mentions the free parameter (kSlotN or kSlotK).
bool references_parameter(const Expr& expr, int slot);

// ---------------------------------------------------------------- parse

using ParseResult = std::variant<ExprPtr, Identity>;

/// Parses a token sequence produced by `tokenize`. A top-level `==` yields
/// an Identity.
ParseResult parse(std::span<const Token> tokens);

ExprPtr parse_expression(std::string_view source);
Identity parse_identity(std::string_view source);

/// Canonical text; parse(pretty_print(e)) is structurally equal to e.
std::string pretty_print(const Expr& expr);
std::string pretty_print(const AffineExpr& affine);
std::string pretty_print(const Identity& identity);

// ---------------------------------------------------------------- evaluate

struct Bindings {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
};

struct EvalOptions {
  /// Table used by eps(); the standard one unless mutation testing.
  CorrectionTable correction = CorrectionTable::standard();
};

/// Largest argument accepted by fib() and pow2().
inline constexpr std::int64_t kMaxFunctionArgument = std::int64_t{1} << 20;

/// Exact value of `expr`.
///
/// Each summation evaluates its body at index 0, 1, ..., J-1 with the safe
/// bound J = max(n, 0) + max(k, 0) + 2, and throws NonTerminatingSum unless
/// the body is zero at index J. C(a, b) uses the zero convention; fib(a) and
/// pow2(a) are 0 for a < 0.
BigNumber evaluate(const Expr& expr, const Bindings& bindings, const EvalOptions& options = {});
BigNumber evaluate(const Expr& expr, CellIndex cell, const EvalOptions& options = {});

}  // namespace pascal::dsl
