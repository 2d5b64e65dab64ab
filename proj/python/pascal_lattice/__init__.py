# Copyright 2026 The pascal-lattice Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact Pascal triangle arithmetic, identity DSL and verifier."""

import json

from ._core import (
    IDENTITIES,
    DslError,
    alternating_diagonal_sum,
    binomial,
    correction_term,
    evaluate,
    fibonacci,
    hockey_stick_sum,
    horizontal_sum,
    pow2,
    pretty_print,
    row,
    shallow_diagonal_sum,
    theorem_rhs,
    vertical_partial_sum,
)
from . import _core

__all__ = [
    "IDENTITIES",
    "DslError",
    "alternating_diagonal_sum",
    "binomial",
    "correction_term",
    "evaluate",
    "fibonacci",
    "hockey_stick_sum",
    "horizontal_sum",
    "pow2",
    "pretty_print",
    "prove",
    "recurrence",
    "row",
    "shallow_diagonal_sum",
    "theorem_rhs",
    "verify",
    "vertical_partial_sum",
]


def verify(source, n_max=100, jobs=1, correction_table=""):
    """Checks an identity (built-in name or DSL text) on 0 <= k <= n <= n_max."""
    return json.loads(_core.verify_json(source, n_max, jobs, correction_table))


def prove(source, n_max=100, jobs=1, correction_table=""):
    """Replays the induction argument for an identity and returns the staged report."""
    return json.loads(_core.prove_json(source, n_max, jobs, correction_table))


def recurrence(target, n_max=100, on_line_correction=1, jobs=1):
    """Checks the Pascal recurrence, with +on_line_correction on n = 2k, for a built-in expression."""
    return json.loads(_core.recurrence_json(target, n_max, on_line_correction, jobs))
