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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pascal/catalog.hpp"
#include "pascal/core.hpp"
#include "pascal/dsl.hpp"
#include "pascal/sums.hpp"
#include "pascal/verifier.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const pascal::BigNumber& value) { return py::int_(py::str(value.to_string())); }

py::list to_py(const std::vector<pascal::BigNumber>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

pascal::dsl::Identity load_identity(const std::string& source) {
  if (const auto* named = pascal::catalog::find_identity(source)) return pascal::dsl::parse_identity(named->text);
  return pascal::dsl::parse_identity(source);
}

pascal::verifier::CheckOptions check_options(unsigned jobs, const std::string& correction_table) {
  pascal::verifier::CheckOptions options;
  options.jobs = jobs;
  if (!correction_table.empty()) options.eval.correction = pascal::CorrectionTable::parse(correction_table);
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Pascal triangle arithmetic, identity DSL and verifier";

  py::register_exception<pascal::dsl::Error>(m, "DslError", PyExc_ValueError);

  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(pascal::binomial({n, k})); }, py::arg("n"),
        py::arg("k"), "C(n, k), zero outside 0 <= k <= n.");
  m.def("row", [](std::int64_t n) { return to_py(pascal::row(n)); }, py::arg("n"));
  m.def("fibonacci", [](std::int64_t n) { return to_py(pascal::fibonacci(n)); }, py::arg("n"));
  m.def("pow2", [](std::int64_t n) { return to_py(pascal::pow2(n)); }, py::arg("n"));
  m.def("correction_term", &pascal::correction_term, py::arg("d"));
  m.def("horizontal_sum", [](std::int64_t n) { return to_py(pascal::horizontal_sum(n)); }, py::arg("n"));
  m.def("hockey_stick_sum", [](std::int64_t n, std::int64_t k) { return to_py(pascal::hockey_stick_sum(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("shallow_diagonal_sum", [](std::int64_t n) { return to_py(pascal::shallow_diagonal_sum(n)); }, py::arg("n"));
  m.def("vertical_partial_sum",
        [](std::int64_t n, std::int64_t k) { return to_py(pascal::vertical_partial_sum(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("alternating_diagonal_sum",
        [](std::int64_t n, std::int64_t k) { return to_py(pascal::alternating_diagonal_sum(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("theorem_rhs", [](std::int64_t n, std::int64_t k) { return to_py(pascal::theorem_rhs(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def(
      "evaluate",
      [](const std::string& text, std::optional<std::int64_t> n, std::optional<std::int64_t> k) {
        const auto expr = pascal::dsl::parse_expression(text);
        return to_py(pascal::dsl::evaluate(*expr, pascal::dsl::Bindings{n, k}));
      },
      py::arg("text"), py::arg("n") = py::none(), py::arg("k") = py::none());
  m.def(
      "pretty_print",
      [](const std::string& text) {
        if (text.find("==") != std::string::npos) return pascal::dsl::pretty_print(pascal::dsl::parse_identity(text));
        return pascal::dsl::pretty_print(*pascal::dsl::parse_expression(text));
      },
      py::arg("text"), "Canonical form of an expression or identity.");

  m.def(
      "verify_json",
      [](const std::string& source, std::int64_t n_max, unsigned jobs, const std::string& correction_table) {
        const auto identity = load_identity(source);
        const auto options = check_options(jobs, correction_table);
        py::gil_scoped_release release;
        return pascal::verifier::to_json(pascal::verifier::check_identity(identity, {n_max}, options), -1);
      },
      py::arg("source"), py::arg("n_max") = 100, py::arg("jobs") = 1, py::arg("correction_table") = "");
  m.def(
      "prove_json",
      [](const std::string& source, std::int64_t n_max, unsigned jobs, const std::string& correction_table) {
        const auto identity = load_identity(source);
        const auto options = check_options(jobs, correction_table);
        py::gil_scoped_release release;
        return pascal::verifier::to_json(pascal::verifier::inductive_proof_check(identity, n_max, options), -1);
      },
      py::arg("source"), py::arg("n_max") = 100, py::arg("jobs") = 1, py::arg("correction_table") = "");
  m.def(
      "recurrence_json",
      [](const std::string& target, std::int64_t n_max, int on_line_correction, unsigned jobs) {
        const auto* named = pascal::catalog::find_expression(target);
        if (named == nullptr) throw pascal::UsageError("unknown recurrence target: " + target);
        const pascal::verifier::CellFunction f = [named](pascal::CellIndex c) { return named->direct(c.n, c.k); };
        const auto options = check_options(jobs, "");
        py::gil_scoped_release release;
        return pascal::verifier::to_json(
            pascal::verifier::check_pascal_recurrence(std::string(named->name), f, {n_max}, on_line_correction, options),
            -1);
      },
      py::arg("target"), py::arg("n_max") = 100, py::arg("on_line_correction") = 1, py::arg("jobs") = 1);

  py::dict builtins;
  for (const auto& i : pascal::catalog::identities()) builtins[py::str(std::string(i.name))] = std::string(i.text);
  m.attr("IDENTITIES") = builtins;
}
