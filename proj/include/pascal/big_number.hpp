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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pascal {

/// Exact signed integer of unbounded magnitude.
///
/// Thin value type over boost::multiprecision::cpp_int so the rest of the
/// library never sees the backend. There is no conversion to or from
/// floating point.
class BigNumber {
 public:
  BigNumber() = default;
  BigNumber(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static BigNumber from_string(std::string_view text);
  static BigNumber power_of_two(std::uint64_t exponent);

  BigNumber& operator+=(const BigNumber& o) {
    value_ += o.value_;
    return *this;
  }
  BigNumber& operator-=(const BigNumber& o) {
    value_ -= o.value_;
    return *this;
  }
  BigNumber& operator*=(const BigNumber& o) {
    value_ *= o.value_;
    return *this;
  }
  void negate() { value_ = -value_; }

  friend BigNumber operator+(BigNumber a, const BigNumber& b) { return a += b; }
  friend BigNumber operator-(BigNumber a, const BigNumber& b) { return a -= b; }
  friend BigNumber operator*(BigNumber a, const BigNumber& b) { return a *= b; }
  friend BigNumber operator-(BigNumber a) {
    a.negate();
    return a;
  }

  /// Exact division; throws std::domain_error when `divisor` does not divide
  /// this value or is zero.
  BigNumber divide_exact(const BigNumber& divisor) const;

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  friend bool operator==(const BigNumber& a, const BigNumber& b) { return a.value_ == b.value_; }
  friend bool operator<(const BigNumber& a, const BigNumber& b) { return a.value_ < b.value_; }
  friend bool operator>(const BigNumber& a, const BigNumber& b) { return b < a; }

  /// Decimal representation, never in scientific notation.
  std::string to_string() const { return value_.str(); }

 private:
  using Backend = boost::multiprecision::cpp_int;
  explicit BigNumber(Backend v) : value_(std::move(v)) {}

  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const BigNumber& v);

}  // namespace pascal
