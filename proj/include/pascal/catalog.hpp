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
#include <functional>
#include <span>
#include <string_view>

#include "pascal/big_number.hpp"

namespace pascal::catalog {

/// A named identity in canonical DSL text.
struct NamedIdentity {
  std::string_view name;
  std::string_view text;
  std::string_view description;
};

/// eq1, eq2, eq3 and theorem.
std::span<const NamedIdentity> identities();
const NamedIdentity* find_identity(std::string_view name);

/// A named lattice-sum expression paired with its direct evaluator.
struct NamedExpression {
  std::string_view name;
  std::string_view text;
  std::function<BigNumber(std::int64_t n, std::int64_t k)> direct;
};

/// horizontal, hockey-stick, shallow-diagonal, vertical and theorem-rhs.
std::span<const NamedExpression> expressions();
const NamedExpression* find_expression(std::string_view name);

}  // namespace pascal::catalog
