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
#include <charconv>
#include <map>

#include "pascal/dsl.hpp"

namespace pascal::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::kEnd) {
      throw SyntaxError(0, "token sequence terminated by end of input", "unterminated sequence");
    }
  }

  ParseResult parse_top() {
    ExprPtr lhs = parse_expr();
    if (peek().kind == TokenKind::kEqualEqual) {
      advance();
      ExprPtr rhs = parse_expr();
      expect(TokenKind::kEnd, "end of input");
      return Identity{std::move(lhs), std::move(rhs)};
    }
    expect(TokenKind::kEnd, "'==' or end of input");
    return lhs;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.offset, expected, t.kind == TokenKind::kEnd ? "end of input" : "'" + t.text + "'");
  }

  const Token& expect(TokenKind kind, const std::string& expected) {
    if (peek().kind != kind) fail(expected);
    return advance();
  }

  // expr = term { ("+" | "-") term }
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const BinaryOp op = advance().kind == TokenKind::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = make_binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  // term = factor { "*" factor }
  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek().kind == TokenKind::kStar) {
      advance();
      lhs = make_binary(BinaryOp::kMul, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  bool at_sign_factor() const {
    return peek(0).kind == TokenKind::kLParen && peek(1).kind == TokenKind::kMinus &&
           peek(2).kind == TokenKind::kInteger && peek(2).text == "1" && peek(3).kind == TokenKind::kRParen &&
           peek(4).kind == TokenKind::kCaret;
  }

  ExprPtr parse_factor() {
    switch (peek().kind) {
      case TokenKind::kInteger:
        return make_integer(BigNumber::from_string(advance().text));
      case TokenKind::kMinus:
        advance();
        return make_negate(parse_factor());
      case TokenKind::kBinomial: {
        advance();
        expect(TokenKind::kLParen, "'('");
        AffineExpr upper = parse_affine();
        expect(TokenKind::kComma, "','");
        AffineExpr lower = parse_affine();
        expect(TokenKind::kRParen, "')'");
        return make_binomial(std::move(upper), std::move(lower));
      }
      case TokenKind::kFib:
        return parse_call(Function::kFib);
      case TokenKind::kPow2:
        return parse_call(Function::kPow2);
      case TokenKind::kEps:
        return parse_call(Function::kEps);
      case TokenKind::kSum:
        return parse_summation();
      case TokenKind::kLParen: {
        if (at_sign_factor()) return parse_sign();
        advance();
        ExprPtr inner = parse_expr();
        expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        fail("integer, '-', builtin, 'sum', '(-1)^' or '('");
    }
  }

  ExprPtr parse_call(Function function) {
    advance();
    expect(TokenKind::kLParen, "'('");
    AffineExpr argument = parse_affine();
    expect(TokenKind::kRParen, "')'");
    return make_call(function, std::move(argument));
  }

  ExprPtr parse_summation() {
    advance();
    const Token& name = expect(TokenKind::kIdentifier, "summation index");
    if (name.text == "n" || name.text == "k" ||
        std::find(scope_.begin(), scope_.end(), name.text) != scope_.end()) {
      throw ShadowedIndex(name.text, name.offset);
    }
    const int slot = kFirstIndexSlot + static_cast<int>(scope_.size());
    expect(TokenKind::kLBracket, "'['");
    scope_.push_back(name.text);
    ExprPtr body = parse_expr();
    scope_.pop_back();
    expect(TokenKind::kRBracket, "']'");
    return make_sum(name.text, slot, std::move(body));
  }

  ExprPtr parse_sign() {
    for (int i = 0; i < 5; ++i) advance();  // ( - 1 ) ^
    if (peek().kind != TokenKind::kIdentifier) fail("summation index after '(-1)^'");
    const Token& name = peek();
    if (name.text == "n" || name.text == "k") fail("summation index after '(-1)^'");
    const int slot = resolve(name);
    advance();
    return make_sign(name.text, slot);
  }

  int resolve(const Token& name) const {
    if (name.text == "n") return kSlotN;
    if (name.text == "k") return kSlotK;
    for (std::size_t d = scope_.size(); d-- > 0;) {
      if (scope_[d] == name.text) return kFirstIndexSlot + static_cast<int>(d);
    }
    throw UnboundVariable(name.text, name.offset);
  }

  // Magnitude of an index constant; 2^63 is accepted only when negated.
  std::int64_t parse_signed(const Token& t, bool negative) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > kLimit || (v == kLimit && !negative)) {
      throw SyntaxError(t.offset, "index constant within 64-bit range", "'" + t.text + "'");
    }
    return negative ? static_cast<std::int64_t>(0 - v) : static_cast<std::int64_t>(v);
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b, std::size_t offset) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
      throw SyntaxError(offset, "index expression within 64-bit range", "overflow");
    }
    return r;
  }

  // affine = ["-"] affineterm { ("+" | "-") affineterm }
  AffineExpr parse_affine() {
    std::int64_t constant = 0;
    std::map<int, AffineTerm> by_slot;
    bool negative = false;
    if (peek().kind == TokenKind::kMinus) {
      advance();
      negative = true;
    }
    for (;;) {
      const std::size_t offset = peek().offset;
      std::int64_t value = negative ? -1 : 1;
      const Token* variable = nullptr;
      if (peek().kind == TokenKind::kInteger) {
        value = parse_signed(advance(), negative);
        if (peek().kind == TokenKind::kStar) {
          advance();
          if (peek().kind != TokenKind::kIdentifier) fail("identifier after '*' in index expression");
          variable = &advance();
        }
      } else if (peek().kind == TokenKind::kIdentifier) {
        variable = &advance();
      } else {
        fail("integer or identifier in index expression");
      }
      if (variable == nullptr) {
        constant = checked_add(constant, value, offset);
      } else {
        const int slot = resolve(*variable);
        auto [it, inserted] = by_slot.try_emplace(slot, AffineTerm{variable->text, 0, slot});
        it->second.coefficient = checked_add(it->second.coefficient, value, offset);
      }
      if (peek().kind == TokenKind::kPlus) {
        negative = false;
      } else if (peek().kind == TokenKind::kMinus) {
        negative = true;
      } else {
        break;
      }
      advance();
    }
    AffineExpr out;
    out.constant = constant;
    for (auto& [slot, term] : by_slot) {
      if (term.coefficient != 0) out.terms.push_back(std::move(term));
    }
    return out;
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) { return Parser(tokens).parse_top(); }

ExprPtr parse_expression(std::string_view source) {
  const auto tokens = tokenize(source);
  auto result = parse(tokens);
  if (auto* e = std::get_if<ExprPtr>(&result)) return std::move(*e);
  const auto eq = std::find_if(tokens.begin(), tokens.end(),
                               [](const Token& t) { return t.kind == TokenKind::kEqualEqual; });
  throw SyntaxError(eq->offset, "expression without '=='", "'=='");
}

Identity parse_identity(std::string_view source) {
  const auto tokens = tokenize(source);
  auto result = parse(tokens);
  if (auto* i = std::get_if<Identity>(&result)) return std::move(*i);
  throw SyntaxError(source.size(), "'==' followed by an expression", "end of input");
}

}  // namespace pascal::dsl
