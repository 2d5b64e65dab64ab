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
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal/big_number.hpp"
#include "pascal/core.hpp"
#include "pascal/dsl.hpp"

namespace pascal::verifier {

/// All cells 0 <= k <= n <= n_max, visited row-major.
struct Region {
  std::int64_t n_max = 0;

  std::uint64_t cell_count() const {
    const auto m = static_cast<std::uint64_t>(n_max);
    return (m + 1) * (m + 2) / 2;
  }
};

struct Counterexample {
  CellIndex cell;
  BigNumber lhs;
  BigNumber rhs;
};

enum class Verdict { kVerified, kFailed };
const char* to_string(Verdict v);

struct ReportStage;

struct IdentityReport {
  std::string identity_text;
  std::int64_t n_max = 0;
  std::uint64_t cells_checked = 0;
  /// Sorted ascending by (n, k).
  std::vector<Counterexample> counterexamples;
  std::int64_t elapsed_ms = 0;
  Verdict verdict = Verdict::kVerified;
  /// Sub-checks, only populated by inductive_proof_check.
  std::vector<ReportStage> stages;

  bool verified() const { return verdict == Verdict::kVerified; }
};

struct ReportStage {
  std::string name;
  IdentityReport report;
};

/// Evaluation failure at a specific cell, e.g. a non-terminating sum.
class CellEvaluationError : public std::runtime_error {
 public:
  CellEvaluationError(CellIndex cell, const std::string& what);
  CellIndex cell;
};

struct CheckOptions {
  /// Worker threads. Results are identical for every value.
  unsigned jobs = 1;
  dsl::EvalOptions eval;
};

/// Evaluates both sides at every cell of `region` and collects every
/// counterexample.
IdentityReport check_identity(const dsl::Identity& identity, Region region, const CheckOptions& options = {});

using CellFunction = std::function<BigNumber(CellIndex)>;

/// How check_pascal_recurrence reads f(n-1, -1) and f(n-1, n).
enum class Boundary {
  kZeroOutside,  // both are taken as 0
  kLiteral,      // f is evaluated there as-is
};

/// Checks f(n,k) = f(n-1,k) + f(n-1,k-1) + c*[n = 2k] for every cell of
/// `region` with n >= 1, where c is `on_line_correction`. `name` labels f
/// in the report.
IdentityReport check_pascal_recurrence(const std::string& name, const CellFunction& f, Region region,
                                       int on_line_correction, const CheckOptions& options = {},
                                       Boundary boundary = Boundary::kZeroOutside);

/// Replays the induction argument on 0 <= k <= n <= n_max:
///   base_cases      lhs = rhs on the columns k = 0 and k = n;
///   lhs_recurrence  the left side obeys the recurrence with +1 on n = 2k;
///   rhs_recurrence  the same for the right side;
///   cross_check     check_identity on the region.
/// Both sides are evaluated literally at k = -1 and k = n during the
/// recurrence stages. The verdict is VERIFIED iff every stage is; the
/// counterexamples are the union of the stages' by cell, first stage wins.
/// Throws UsageError when neither side mentions k.
IdentityReport inductive_proof_check(const dsl::Identity& identity, std::int64_t n_max,
                                     const CheckOptions& options = {});

/// JSON object {"identity", "n_max", "cells_checked", "verdict",
/// "counterexamples": [{"n", "k", "lhs", "rhs"}], "elapsed_ms"} with big
/// values as decimal strings. Reports with stages get an extra "stages"
/// array of {"stage": name, "report": {...}}. `indent` < 0 is compact.
std::string to_json(const IdentityReport& report, int indent = 2);
std::string to_json(const std::vector<IdentityReport>& reports, int indent = 2);

}  // namespace pascal::verifier
