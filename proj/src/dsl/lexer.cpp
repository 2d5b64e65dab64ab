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

#include <cctype>

#include "pascal/dsl.hpp"

namespace pascal::dsl {

IllegalCharacter::IllegalCharacter(std::size_t offset_, char c)
    : Error("illegal character '" + std::string(1, c) + "' at offset " + std::to_string(offset_)),
      offset(offset_),
      character(c) {}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kCaret: return "'^'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kComma: return "','";
    case TokenKind::kEqualEqual: return "'=='";
    case TokenKind::kBinomial: return "'C'";
    case TokenKind::kFib: return "'fib'";
    case TokenKind::kPow2: return "'pow2'";
    case TokenKind::kEps: return "'eps'";
    case TokenKind::kSum: return "'sum'";
    case TokenKind::kEnd: return "end of input";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

TokenKind keyword_or_identifier(std::string_view word) {
  if (word == "C") return TokenKind::kBinomial;
  if (word == "fib") return TokenKind::kFib;
  if (word == "pow2") return TokenKind::kPow2;
  if (word == "eps") return TokenKind::kEps;
  if (word == "sum") return TokenKind::kSum;
  return TokenKind::kIdentifier;
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto single = [&](TokenKind kind) {
    tokens.push_back({kind, std::string(1, source[i]), i});
    ++i;
  };
  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_ident_start(c)) {
      const std::size_t start = i;
      while (i < source.size() && is_ident_char(source[i])) ++i;
      const auto word = source.substr(start, i - start);
      tokens.push_back({keyword_or_identifier(word), std::string(word), start});
      continue;
    }
    if (is_digit(c)) {
      const std::size_t start = i;
      while (i < source.size() && is_digit(source[i])) ++i;
      tokens.push_back({TokenKind::kInteger, std::string(source.substr(start, i - start)), start});
      continue;
    }
    switch (c) {
      case '+': single(TokenKind::kPlus); break;
      case '-': single(TokenKind::kMinus); break;
      case '*': single(TokenKind::kStar); break;
      case '^': single(TokenKind::kCaret); break;
      case '(': single(TokenKind::kLParen); break;
      case ')': single(TokenKind::kRParen); break;
      case '[': single(TokenKind::kLBracket); break;
      case ']': single(TokenKind::kRBracket); break;
      case ',': single(TokenKind::kComma); break;
      case '=':
        if (i + 1 < source.size() && source[i + 1] == '=') {
          tokens.push_back({TokenKind::kEqualEqual, "==", i});
          i += 2;
          break;
        }
        throw IllegalCharacter(i, c);
      default:
        throw IllegalCharacter(i, c);
    }
  }
  tokens.push_back({TokenKind::kEnd, "", source.size()});
  return tokens;
}

}  // namespace pascal::dsl
