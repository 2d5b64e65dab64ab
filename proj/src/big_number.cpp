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

#include "pascal/big_number.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pascal {

BigNumber BigNumber::from_string(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  Backend v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("invalid integer literal: " + std::string(text));
    }
    v *= 10;
    v += c - '0';
  }
  if (negative) v = -v;
  return BigNumber(std::move(v));
}

BigNumber BigNumber::power_of_two(std::uint64_t exponent) {
  Backend v = 1;
  v <<= exponent;
  return BigNumber(std::move(v));
}

BigNumber BigNumber::divide_exact(const BigNumber& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  Backend q;
  Backend r;
  boost::multiprecision::divide_qr(value_, divisor.value_, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact division");
  return BigNumber(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const BigNumber& v) { return os << v.to_string(); }

}  // namespace pascal
