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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pascal/cli.hpp"
#include "pascal/core.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pascal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& suffix = ".txt") {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("pascal_cli_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++) + suffix);
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("row") {
  CHECK(run({"row", "5", "--format", "csv"}).out == "1,5,10,10,5,1\n");
  CHECK(run({"row", "0"}).out == "1\n");
  CHECK(run({"row", "4"}).out == "1 4 6 4 1\n");
  CHECK(run({"row", "3", "--format", "json"}).out == "[\"1\",\"3\",\"3\",\"1\"]\n");
  const auto bad = run({"row", "-1"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"row", "x"}).code == 2);
  CHECK(run({"row", "3", "--format", "xml"}).code == 2);

  for (int n : {1, 17, 120}) {
    const auto r = run({"row", std::to_string(n), "--format", "csv"});
    CHECK(std::count(r.out.begin(), r.out.end(), ',') == n);
  }
  // Exact decimals, no exponent notation.
  const auto wide = run({"row", "200", "--format", "csv"}).out;
  CHECK(wide.find('e') == std::string::npos);
  CHECK(wide.find("90548514656103281165404177077484163874504589675413336841320") != std::string::npos);
}

TEST_CASE("eval") {
  auto r = run({"eval", "sum j [ C(n-2*j, k-j) ]", "-n", "6", "-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "20\n");
  CHECK(run({"eval", "pow2(n)", "-n", "5"}).out == "32\n");

  r = run({"eval", "sum j [ pow2(j) ]", "-n", "1", "-k", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NonTerminatingSum") != std::string::npos);

  CHECK(run({"eval", "C(n,?)", "-n", "1"}).code == 2);
  CHECK(run({"eval", "C(n, k)", "-n", "1"}).code == 2);  // k unbound
  CHECK(run({"eval", "C(n, k) == 1", "-n", "1", "-k", "1"}).code == 2);
  CHECK(run({"eval", "sum j [ C(m, j) ]", "-n", "1"}).code == 2);
}

TEST_CASE("verify built-ins") {
  CHECK(run({"verify", "theorem", "--n-max", "300"}).code == 0);
  CHECK(run({"verify", "eq2", "--n-max", "200"}).code == 0);
  CHECK(run({"verify", "eq1", "--n-max", "50"}).code == 0);
  const auto r = run({"verify", "eq3", "--n-max", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VERIFIED") != std::string::npos);
}

TEST_CASE("verify files") {
  TempFile off("C(n,k) == C(n,k) + 1\n");
  const auto r = run({"verify", off.path(), "--n-max", "5"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAILED") != std::string::npos);

  TempFile several("# classical identities\n\nsum i [ C(n, i) ] == pow2(n)\n  # indented comment\nC(n, k) == C(n, n-k)\n");
  TempFile report("", ".json");
  CHECK(run({"verify", several.path(), "--n-max", "20", "--report", report.path()}).code == 0);
  const auto j = nlohmann::json::parse(slurp(report.path()));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);

  CHECK(run({"verify", "/nonexistent/identities.txt"}).code == 2);
  TempFile broken("C(n,k) == C(n,k\n");
  CHECK(run({"verify", broken.path()}).code == 2);
  TempFile empty("# nothing\n");
  CHECK(run({"verify", empty.path()}).code == 2);
  TempFile diverges("C(n,k) == sum j [ pow2(j) ]\n");
  CHECK(run({"verify", diverges.path(), "--n-max", "3"}).code == 2);
  CHECK(run({"verify", "theorem", "--n-max", "-3"}).code == 2);
  CHECK(run({"verify", "theorem", "--jobs", "0"}).code == 2);
}

TEST_CASE("verify with a mutated correction table") {
  TempFile report("", ".json");
  const auto r = run({"verify", "theorem", "--n-max", "20", "--correction-table", "0,1,-1,0,1,1", "--report",
                      report.path()});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(slurp(report.path()));
  CHECK(j.at("counterexamples")[0].at("n") == 1);
  CHECK(j.at("counterexamples")[0].at("k") == 0);
  CHECK(run({"verify", "theorem", "--correction-table", "1,2"}).code == 2);
}

TEST_CASE("verify json output") {
  const auto r = run({"verify", "theorem", "--n-max", "10", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("cells_checked") == 66);
  CHECK(j.at("verdict") == "VERIFIED");
}

TEST_CASE("recurrence") {
  CHECK(run({"recurrence", "--target", "vertical", "--n-max", "100"}).code == 0);
  CHECK(run({"recurrence", "--target", "theorem-rhs", "--n-max", "100"}).code == 0);
  TempFile report("", ".json");
  const auto r = run({"recurrence", "--target", "vertical", "--n-max", "10", "--no-line-correction", "--report",
                      report.path()});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample (n, k) = (2, 1): lhs=3 rhs=2") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(report.path()));
  CHECK(j.at("counterexamples")[0].at("n") == 2);
  CHECK(j.at("counterexamples")[0].at("k") == 1);
  CHECK(run({"recurrence", "--target", "diagonal"}).code == 2);
  CHECK(run({"recurrence"}).code == 2);
}

TEST_CASE("prove") {
  const auto r = run({"prove", "theorem", "--n-max", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stage rhs_recurrence: VERIFIED") != std::string::npos);
  CHECK(run({"prove", "eq1", "--n-max", "100"}).code == 2);

  TempFile mutated("sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] - eps(n-2*k)\n");
  CHECK(run({"prove", mutated.path(), "--n-max", "50"}).code == 1);
  CHECK(run({"prove", "theorem", "--n-max", "30", "--correction-table", "0,-1,-1,0,1,0"}).code == 1);
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--n-max", "20", "--rows", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("row generation: 51 rows") != std::string::npos);
  CHECK(r.out.find("cells/second") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"row", "3", "--bogus"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("theorem") != std::string::npos);
}

TEST_CASE("PASCAL_CACHE_ROWS pre-sizes the cache") {
  ::setenv("PASCAL_CACHE_ROWS", "700", 1);
  CHECK(run({"row", "1"}).code == 0);
  CHECK(pascal::TriangleCache::global().size() >= 700);
  ::setenv("PASCAL_CACHE_ROWS", "lots", 1);
  const auto r = run({"row", "1"});
  CHECK(r.code == 0);
  CHECK(r.err.find("PASCAL_CACHE_ROWS") != std::string::npos);
  ::unsetenv("PASCAL_CACHE_ROWS");
}
