# Copyright (C) 2026 The stickel Authors
# This program is Licensed under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License. See accompanying LICENSE file.

"""Exact cyclotomic arithmetic, character tables, pairings and Gauss sums.

Reports come back as plain dicts decoded from the C++ JSON output.
"""

import json
from fractions import Fraction

from ._stickel import (
    ConfigError,
    CycNum,
    DomainError,
    Error,
    GroupError,
    InternalError,
    PrecisionExhausted,
    gauss_sum,
    group_order,
    j_star,
    jacobi_sum,
    preset_names,
)
from . import _stickel as _core

__all__ = [
    "ConfigError",
    "CycNum",
    "DomainError",
    "Error",
    "GroupError",
    "InternalError",
    "PrecisionExhausted",
    "chartab",
    "crux",
    "factorization",
    "free_generator",
    "gauss_report",
    "gauss_sum",
    "group_order",
    "j_star",
    "jacobi_sum",
    "lambda_valuation",
    "ledger_demo",
    "pairings",
    "preset_names",
    "run_suite",
]


def chartab(group):
    """Character table of a preset plus its certification report."""
    return json.loads(_core.chartab_json(group))


def pairings(group, s, star=False):
    """Pairing of each irreducible (table order) with s, as Fractions."""
    return [Fraction(x) for x in _core.pairings(group, str(s), star)]


def lambda_valuation(a, p, precision=0):
    v = json.loads(_core.lambda_valuation(a, p, precision))
    return {
        "lambda_val": Fraction(v["lambda_val"]),
        "p_val": Fraction(v["p_val"]),
        "precision": v["precision"],
    }


def gauss_report(p):
    return json.loads(_core.gauss_report_json(p))


def free_generator(e, n, p=0):
    """Free-generator report for C_e at offset n; p = 0 picks the smallest p = 1 mod e."""
    return json.loads(_core.free_generator_json(e, n, p))


def factorization(group, s):
    return json.loads(_core.factorization_json(group, str(s)))


def crux(p, e, precision=0):
    return json.loads(_core.crux_json(p, e, precision))


def ledger_demo(spec):
    return json.loads(_core.ledger_demo_json(json.dumps(spec)))


def run_suite(out, config=None):
    """Writes every report into out; returns {pass, first_failure, files}."""
    cfg = "" if config is None else json.dumps(config)
    return json.loads(_core.run_suite_json(cfg, str(out)))
