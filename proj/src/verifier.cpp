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

#include "pascal/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

namespace pascal::verifier {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

/// Checks the cells of one row, appending failures to `out`. Returns the
/// number of cells checked.
using RowCheck = std::function<std::uint64_t(std::int64_t n, std::vector<Counterexample>& out)>;

struct SweepResult {
  std::vector<Counterexample> counterexamples;
  std::uint64_t cells = 0;
};

struct WorkerState {
  std::vector<Counterexample> found;
  std::uint64_t cells = 0;
  std::optional<CellEvaluationError> error;
};

// Rows first..last are dealt round-robin to `jobs` workers. Every worker
// visits its rows in ascending order and stops at its first error, so the
// smallest failing cell overall is always observed.
SweepResult sweep(std::int64_t first, std::int64_t last, unsigned jobs, const RowCheck& check) {
  jobs = std::max(1U, jobs);
  std::vector<WorkerState> states(jobs);
  auto work = [&](unsigned w) {
    auto& state = states[w];
    try {
      for (std::int64_t n = first + w; n <= last; n += jobs) state.cells += check(n, state.found);
    } catch (const CellEvaluationError& e) {
      state.error = e;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  const CellEvaluationError* first_error = nullptr;
  SweepResult result;
  for (auto& state : states) {
    if (state.error && (first_error == nullptr || state.error->cell < first_error->cell)) {
      first_error = &*state.error;
    }
    result.cells += state.cells;
    std::move(state.found.begin(), state.found.end(), std::back_inserter(result.counterexamples));
  }
  if (first_error != nullptr) throw *first_error;
  std::sort(result.counterexamples.begin(), result.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.cell < b.cell; });
  return result;
}

template <typename F>
BigNumber at_cell(CellIndex cell, F&& f) {
  try {
    return f();
  } catch (const dsl::Error& e) {
    throw CellEvaluationError(cell, e.what());
  } catch (const UsageError& e) {
    throw CellEvaluationError(cell, e.what());
  }
}

IdentityReport finish(std::string text, std::int64_t n_max, SweepResult sweep_result, Clock::time_point start) {
  IdentityReport report;
  report.identity_text = std::move(text);
  report.n_max = n_max;
  report.cells_checked = sweep_result.cells;
  report.counterexamples = std::move(sweep_result.counterexamples);
  report.verdict = report.counterexamples.empty() ? Verdict::kVerified : Verdict::kFailed;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

void require_region(Region region) {
  if (region.n_max < 0) throw UsageError("n_max must be non-negative, got " + std::to_string(region.n_max));
  if (static_cast<std::size_t>(region.n_max) + 2 >= TriangleCache::kMaxRows) {
    throw UsageError("n_max " + std::to_string(region.n_max) + " exceeds the row cache limit");
  }
}

// Rows a theorem-sized expression touches; warmed before workers start so
// they only read.
void warm_cache(Region region) { TriangleCache::global().ensure(static_cast<std::size_t>(region.n_max) + 1); }

nlohmann::ordered_json report_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity_text;
  j["n_max"] = r.n_max;
  j["cells_checked"] = r.cells_checked;
  j["verdict"] = to_string(r.verdict);
  auto& list = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    list.push_back({{"n", c.cell.n}, {"k", c.cell.k}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}});
  }
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.stages.empty()) {
    auto& stages = j["stages"] = nlohmann::ordered_json::array();
    for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"report", report_json(s.report)}});
  }
  return j;
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::kVerified ? "VERIFIED" : "FAILED"; }

CellEvaluationError::CellEvaluationError(CellIndex cell_, const std::string& what)
    : std::runtime_error("at (n, k) = (" + std::to_string(cell_.n) + ", " + std::to_string(cell_.k) + "): " + what),
      cell(cell_) {}

IdentityReport check_identity(const dsl::Identity& identity, Region region, const CheckOptions& options) {
  require_region(region);
  const auto start = Clock::now();
  warm_cache(region);
  const auto& eval = options.eval;
  auto result = sweep(0, region.n_max, options.jobs, [&](std::int64_t n, std::vector<Counterexample>& out) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const CellIndex cell{n, k};
      BigNumber lhs = at_cell(cell, [&] { return dsl::evaluate(*identity.lhs, cell, eval); });
      BigNumber rhs = at_cell(cell, [&] { return dsl::evaluate(*identity.rhs, cell, eval); });
      if (!(lhs == rhs)) out.push_back({cell, std::move(lhs), std::move(rhs)});
    }
    return static_cast<std::uint64_t>(n + 1);
  });
  return finish(dsl::pretty_print(identity), region.n_max, std::move(result), start);
}

IdentityReport check_pascal_recurrence(const std::string& name, const CellFunction& f, Region region,
                                       int on_line_correction, const CheckOptions& options, Boundary boundary) {
  require_region(region);
  const auto start = Clock::now();
  warm_cache(region);
  auto value = [&](CellIndex cell) -> BigNumber {
    if (boundary == Boundary::kZeroOutside && !cell.in_triangle()) return {};
    return at_cell(cell, [&] { return f(cell); });
  };
  auto result = sweep(1, region.n_max, options.jobs, [&](std::int64_t n, std::vector<Counterexample>& out) {
    for (std::int64_t k = 0; k <= n; ++k) {
      BigNumber lhs = value({n, k});
      BigNumber rhs = value({n - 1, k}) + value({n - 1, k - 1});
      if (n == 2 * k) rhs += BigNumber(on_line_correction);
      if (!(lhs == rhs)) out.push_back({{n, k}, std::move(lhs), std::move(rhs)});
    }
    return static_cast<std::uint64_t>(n + 1);
  });
  std::string text = name + "(n, k) == " + name + "(n-1, k) + " + name + "(n-1, k-1) + " +
                     std::to_string(on_line_correction) + "*[n == 2*k]";
  return finish(std::move(text), region.n_max, std::move(result), start);
}

IdentityReport inductive_proof_check(const dsl::Identity& identity, std::int64_t n_max, const CheckOptions& options) {
  if (!identity.uses_k()) {
    throw UsageError("induction over (n, k) needs an identity that mentions k: " + dsl::pretty_print(identity));
  }
  const Region region{n_max};
  require_region(region);
  const auto start = Clock::now();
  warm_cache(region);
  const auto& eval = options.eval;

  IdentityReport report;
  report.identity_text = dsl::pretty_print(identity);
  report.n_max = n_max;

  {
    const auto stage_start = Clock::now();
    auto result = sweep(0, n_max, options.jobs, [&](std::int64_t n, std::vector<Counterexample>& out) {
      std::uint64_t cells = 0;
      const std::vector<std::int64_t> columns = n == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{0, n};
      for (const std::int64_t k : columns) {
        const CellIndex cell{n, k};
        BigNumber lhs = at_cell(cell, [&] { return dsl::evaluate(*identity.lhs, cell, eval); });
        BigNumber rhs = at_cell(cell, [&] { return dsl::evaluate(*identity.rhs, cell, eval); });
        if (!(lhs == rhs)) out.push_back({cell, std::move(lhs), std::move(rhs)});
        ++cells;
      }
      return cells;
    });
    report.stages.push_back({"base_cases", finish(report.identity_text + " on k = 0 and k = n", n_max,
                                                  std::move(result), stage_start)});
  }
  for (const auto& [stage, side] : {std::pair{"lhs_recurrence", identity.lhs}, std::pair{"rhs_recurrence", identity.rhs}}) {
    const dsl::ExprPtr expr = side;
    auto f = [&eval, expr](CellIndex cell) { return dsl::evaluate(*expr, cell, eval); };
    auto sub = check_pascal_recurrence("f", f, region, 1, options, Boundary::kLiteral);
    sub.identity_text = "f = " + dsl::pretty_print(*expr) + ": " + sub.identity_text;
    report.stages.push_back({stage, std::move(sub)});
  }
  report.stages.push_back({"cross_check", check_identity(identity, region, options)});

  report.cells_checked = region.cell_count();
  std::set<CellIndex> seen;
  for (const auto& s : report.stages) {
    for (const auto& c : s.report.counterexamples) {
      if (seen.insert(c.cell).second) report.counterexamples.push_back(c);
    }
  }
  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) { return a.cell < b.cell; });
  const bool all_verified =
      std::all_of(report.stages.begin(), report.stages.end(), [](const auto& s) { return s.report.verified(); });
  report.verdict = all_verified ? Verdict::kVerified : Verdict::kFailed;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::string to_json(const IdentityReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const std::vector<IdentityReport>& reports, int indent) {
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  return list.dump(indent);
}

}  // namespace pascal::verifier
