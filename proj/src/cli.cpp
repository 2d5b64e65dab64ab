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

#include "pascal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pascal/catalog.hpp"
#include "pascal/core.hpp"
#include "pascal/dsl.hpp"
#include "pascal/sums.hpp"
#include "pascal/verifier.hpp"

namespace pascal::cli {

namespace {

constexpr std::size_t kCounterexamplesShown = 10;

enum class Format { kText, kCsv, kJson };

/// Options shared by the subcommands; a field is only meaningful for the
/// subcommands that register it.
struct CliConfig {
  std::int64_t row_index = 0;
  std::string expression;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::string source;
  std::int64_t n_max = 100;
  unsigned jobs = 1;
  Format format = Format::kText;
  std::string report_path;
  std::string target;
  bool no_line_correction = false;
  std::string correction_table;
  std::int64_t bench_rows = 1000;
  std::int64_t bench_n_max = 300;
};

/// A failure that maps to exit code 2.
class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedIdentity {
  std::string label;
  dsl::Identity identity;
};

std::vector<LoadedIdentity> load_source(const std::string& source) {
  if (const auto* builtin = catalog::find_identity(source)) {
    return {{std::string(builtin->name), dsl::parse_identity(builtin->text)}};
  }
  std::ifstream in(source);
  if (!in) throw Usage("cannot read '" + source + "': not a built-in identity name or a readable file");
  std::vector<LoadedIdentity> out;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back({source + ":" + std::to_string(line_no), dsl::parse_identity(line)});
    } catch (const dsl::Error& e) {
      throw Usage(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (out.empty()) throw Usage("'" + source + "' contains no identities");
  return out;
}

verifier::CheckOptions check_options(const CliConfig& cfg) {
  verifier::CheckOptions options;
  options.jobs = cfg.jobs;
  if (!cfg.correction_table.empty()) options.eval.correction = CorrectionTable::parse(cfg.correction_table);
  return options;
}

void print_report(std::ostream& out, const std::string& label, const verifier::IdentityReport& r) {
  out << label << ": " << verifier::to_string(r.verdict) << "  n_max=" << r.n_max << " cells=" << r.cells_checked
      << " counterexamples=" << r.counterexamples.size() << " elapsed_ms=" << r.elapsed_ms << '\n';
  out << "  " << r.identity_text << '\n';
  for (const auto& s : r.stages) {
    out << "  stage " << s.name << ": " << verifier::to_string(s.report.verdict) << " (" << s.report.cells_checked
        << " cells)\n";
  }
  const auto shown = std::min(r.counterexamples.size(), kCounterexamplesShown);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = r.counterexamples[i];
    out << "  counterexample (n, k) = (" << c.cell.n << ", " << c.cell.k << "): lhs=" << c.lhs << " rhs=" << c.rhs
        << '\n';
  }
  if (r.counterexamples.size() > shown) out << "  ... " << r.counterexamples.size() - shown << " more\n";
}

int emit_reports(const CliConfig& cfg, const std::vector<std::string>& labels,
                 const std::vector<verifier::IdentityReport>& reports, std::ostream& out) {
  const std::string json = reports.size() == 1 ? verifier::to_json(reports.front()) : verifier::to_json(reports);
  if (cfg.format == Format::kJson) {
    out << json << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) print_report(out, labels[i], reports[i]);
  }
  if (!cfg.report_path.empty()) {
    std::ofstream file(cfg.report_path);
    if (!(file << json << '\n')) throw Usage("cannot write report to '" + cfg.report_path + "'");
  }
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verified(); });
  return all ? kExitVerified : kExitCounterexample;
}

int cmd_row(const CliConfig& cfg, std::ostream& out) {
  const auto values = row(cfg.row_index);
  if (cfg.format == Format::kJson) {
    auto list = nlohmann::json::array();
    for (const auto& v : values) list.push_back(v.to_string());
    out << list.dump() << '\n';
    return kExitVerified;
  }
  const char sep = cfg.format == Format::kCsv ? ',' : ' ';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  out << '\n';
  return kExitVerified;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const auto expr = dsl::parse_expression(cfg.expression);
  out << dsl::evaluate(*expr, dsl::Bindings{cfg.n, cfg.k}, check_options(cfg).eval) << '\n';
  return kExitVerified;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const auto options = check_options(cfg);
  std::vector<std::string> labels;
  std::vector<verifier::IdentityReport> reports;
  for (const auto& item : load_source(cfg.source)) {
    labels.push_back(item.label);
    reports.push_back(verifier::check_identity(item.identity, {cfg.n_max}, options));
  }
  return emit_reports(cfg, labels, reports, out);
}

int cmd_recurrence(const CliConfig& cfg, std::ostream& out) {
  verifier::CellFunction f;
  if (cfg.target == "vertical") {
    f = [](CellIndex c) { return vertical_partial_sum(c.n, c.k); };
  } else {
    f = [](CellIndex c) { return theorem_rhs(c.n, c.k); };
  }
  const int correction = cfg.no_line_correction ? 0 : 1;
  auto report = verifier::check_pascal_recurrence(cfg.target, f, {cfg.n_max}, correction, check_options(cfg));
  return emit_reports(cfg, {cfg.target}, {report}, out);
}

int cmd_prove(const CliConfig& cfg, std::ostream& out) {
  const auto options = check_options(cfg);
  std::vector<std::string> labels;
  std::vector<verifier::IdentityReport> reports;
  for (const auto& item : load_source(cfg.source)) {
    labels.push_back(item.label);
    reports.push_back(verifier::inductive_proof_check(item.identity, cfg.n_max, options));
  }
  return emit_reports(cfg, labels, reports, out);
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::duration d) { return std::chrono::duration<double>(d).count(); };

  double row_seconds = 0;
  {
    TriangleCache fresh;
    const auto rows_start = Clock::now();
    fresh.ensure(static_cast<std::size_t>(cfg.bench_rows));
    row_seconds = seconds(Clock::now() - rows_start);
  }
  const double row_cells = static_cast<double>(verifier::Region{cfg.bench_rows}.cell_count());
  out << "row generation: " << cfg.bench_rows + 1 << " rows, " << static_cast<std::uint64_t>(row_cells)
      << " cells in " << row_seconds << " s (" << static_cast<std::uint64_t>(row_cells / std::max(row_seconds, 1e-9))
      << " cells/second)\n";

  const auto identity = dsl::parse_identity(catalog::find_identity("theorem")->text);
  const auto verify_start = Clock::now();
  const auto report = verifier::check_identity(identity, {cfg.bench_n_max}, check_options(cfg));
  const double verify_seconds = seconds(Clock::now() - verify_start);
  out << "theorem verification: n_max=" << cfg.bench_n_max << ", " << report.cells_checked << " cells in "
      << verify_seconds << " s ("
      << static_cast<std::uint64_t>(static_cast<double>(report.cells_checked) / std::max(verify_seconds, 1e-9))
      << " cells/second, jobs=" << cfg.jobs << ", " << verifier::to_string(report.verdict) << ")\n";
  return report.verified() ? kExitVerified : kExitCounterexample;
}

void presize_cache_from_env(std::ostream& err) {
  const char* value = std::getenv("PASCAL_CACHE_ROWS");
  if (value == nullptr || *value == '\0') return;
  std::size_t rows = 0;
  try {
    std::size_t used = 0;
    rows = std::stoul(value, &used);
    if (value[used] != '\0') throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    err << "warning: ignoring PASCAL_CACHE_ROWS='" << value << "' (expected a row count)\n";
    return;
  }
  if (rows == 0) return;
  TriangleCache::global().ensure(std::min(rows, TriangleCache::kMaxRows) - 1);
}

std::string builtin_help() {
  std::ostringstream s;
  s << "Built-in identities (usable as SOURCE for verify and prove):\n";
  for (const auto& i : catalog::identities()) s << "  " << i.name << "  " << i.text << "\n";
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pascal-triangle lattice sums: evaluate expressions and verify identities."};
  app.name("pascal");
  app.footer(builtin_help());
  app.require_subcommand(1);

  CliConfig cfg;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_region = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Check all cells 0 <= k <= n <= N")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", cfg.jobs, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    sub->add_option("--report", cfg.report_path, "Also write the JSON report to this path");
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--correction-table", cfg.correction_table,
                    "eps values for d mod 6 = 0..5 when d > 0 (default 0,-1,-1,0,1,1)");
  };

  auto* row_cmd = app.add_subcommand("row", "Print row n of the triangle");
  row_cmd->add_option("n", cfg.row_index, "Row index")->required();
  add_format(row_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a lattice-sum expression");
  eval_cmd->add_option("expression", cfg.expression, "Expression, e.g. \"sum j [ C(n-2*j, k-j) ]\"")->required();
  eval_cmd->add_option("-n", cfg.n, "Value of n");
  eval_cmd->add_option("-k", cfg.k, "Value of k");

  auto* verify_cmd = app.add_subcommand("verify", "Check identities on every cell of a region");
  verify_cmd->add_option("source", cfg.source, "Built-in identity name or file with one identity per line")
      ->required();
  add_region(verify_cmd);
  add_format(verify_cmd);
  add_table(verify_cmd);

  auto* rec_cmd = app.add_subcommand("recurrence", "Check the Pascal recurrence with +c on the line n = 2k");
  rec_cmd->add_option("--target", cfg.target, "vertical or theorem-rhs")
      ->required()
      ->check(CLI::IsMember({"vertical", "theorem-rhs"}));
  rec_cmd->add_flag("--no-line-correction", cfg.no_line_correction, "Use c = 0 instead of c = 1");
  add_region(rec_cmd);
  add_format(rec_cmd);

  auto* prove_cmd = app.add_subcommand("prove", "Replay the induction: base columns plus both recurrences");
  prove_cmd->add_option("source", cfg.source, "Built-in identity name or file with one identity per line")
      ->required();
  add_region(prove_cmd);
  add_format(prove_cmd);
  add_table(prove_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Time row generation and theorem verification");
  bench_cmd->add_option("--n-max", cfg.bench_n_max, "Region for the theorem verification (default 300)")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--rows", cfg.bench_rows, "Rows to generate (default 1000)")
      ->check(CLI::Range(std::int64_t{0}, static_cast<std::int64_t>(TriangleCache::kMaxRows) - 1));
  bench_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    presize_cache_from_env(err);
    if (row_cmd->parsed()) return cmd_row(cfg, out);
    if (eval_cmd->parsed()) return cmd_eval(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (rec_cmd->parsed()) return cmd_recurrence(cfg, out);
    if (prove_cmd->parsed()) return cmd_prove(cfg, out);
    return cmd_bench(cfg, out);
  } catch (const dsl::NonTerminatingSum& e) {
    err << "error: NonTerminatingSum: " << e.what() << '\n';
  } catch (const dsl::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const verifier::CellEvaluationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace pascal::cli
