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

#include "pascal/catalog.hpp"

#include <algorithm>
#include <array>

#include "pascal/sums.hpp"

namespace pascal::catalog {

namespace {

constexpr std::array kIdentities = {
    NamedIdentity{"eq1", "sum i [ C(n, i) ] == pow2(n)", "row sums are powers of two"},
    NamedIdentity{"eq2", "sum j [ C(n-j, k) ] == C(n+1, k+1)", "hockey stick: a column sum is the next diagonal entry"},
    NamedIdentity{"eq3", "sum j [ C(n-j, j) ] == fib(n)", "shallow diagonals sum to Fibonacci numbers"},
    NamedIdentity{"theorem", "sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k)",
                  "vertical sum equals the alternating diagonal sum plus the six-periodic correction"},
};

const std::array<NamedExpression, 5>& expression_table() {
  static const std::array<NamedExpression, 5> table = {
      NamedExpression{"horizontal", "sum i [ C(n, i) ]", [](std::int64_t n, std::int64_t) { return horizontal_sum(n); }},
      NamedExpression{"hockey-stick", "sum j [ C(n-j, k) ]", hockey_stick_sum},
      NamedExpression{"shallow-diagonal", "sum j [ C(n-j, j) ]",
                      [](std::int64_t n, std::int64_t) { return shallow_diagonal_sum(n); }},
      NamedExpression{"vertical", "sum j [ C(n-2*j, k-j) ]", vertical_partial_sum},
      NamedExpression{"theorem-rhs", "sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k)", theorem_rhs},
  };
  return table;
}

}  // namespace

std::span<const NamedIdentity> identities() { return kIdentities; }

const NamedIdentity* find_identity(std::string_view name) {
  const auto it = std::find_if(kIdentities.begin(), kIdentities.end(), [&](const auto& i) { return i.name == name; });
  return it == kIdentities.end() ? nullptr : &*it;
}

std::span<const NamedExpression> expressions() { return expression_table(); }

const NamedExpression* find_expression(std::string_view name) {
  const auto& table = expression_table();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.name == name; });
  return it == table.end() ? nullptr : &*it;
}

}  // namespace pascal::catalog
