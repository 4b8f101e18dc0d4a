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

import cmath
import json
from fractions import Fraction

import pytest

import stickel
from stickel import CycNum


def test_cyclotomic_arithmetic():
    z = CycNum.zeta(3)
    assert z + z * z + CycNum(1) == CycNum(0)
    d = z - z * z
    assert d * d == CycNum(-3)
    assert CycNum.zeta(5).galois_apply(2) == CycNum.zeta(5, 2)
    assert (z + z * z).as_rational() == "-1/1"
    assert z.as_rational() is None
    re, im = z.to_complex()
    assert abs(complex(re, im) - cmath.exp(2j * cmath.pi / 3)) < 1e-12
    assert CycNum.from_json(d.to_json()) == d
    with pytest.raises(ZeroDivisionError):
        z / CycNum(0)


def test_character_table_and_pairings():
    t = stickel.chartab("S3")
    assert t["certification"]["pass"] is True
    assert stickel.group_order("F21") == 21
    assert "Q8" in stickel.preset_names()
    # table order: trivial, sign, standard
    assert stickel.pairings("S3", "(1 2 3)") == [0, 0, 1]
    assert stickel.pairings("S3", "(1 2 3)", star=True) == [0, 0, 0]
    assert sorted(stickel.pairings("C3", 1, star=True)) == [Fraction(-1, 3), 0, Fraction(1, 3)]
    with pytest.raises(stickel.DomainError):
        stickel.pairings("S3", "(1 2)", star=True)
    with pytest.raises(stickel.DomainError):
        stickel.chartab("M11")


def test_gauss_and_valuations():
    t = stickel.gauss_sum(5, 2, 1)
    assert t * t == CycNum(5)
    j = stickel.jacobi_sum(7, 3, 1, 3, 1)
    assert j * j.conj() == CycNum(7)
    v = stickel.lambda_valuation(t, 5)
    assert v["lambda_val"] == 2 and v["p_val"] == Fraction(1, 2)
    assert stickel.j_star(7, 1, 0) == CycNum(1)
    assert stickel.gauss_report(7)["pass"] is True


def test_local_model_and_crux():
    assert stickel.free_generator(3, -1)["pass"] is True
    assert stickel.factorization("F21", "(1 2 3 4 5 6 7)")["pass"] is True
    c = stickel.crux(11, 5)
    assert c["pass"] is True
    assert [r["rhs_val"] for r in c["per_chi"]] == ["0/1", "0/1", "0/1", "-10/1", "-10/1"]


def test_ledger_and_suite(tmp_path):
    spec = {"group": "S3", "places": [{"label": "a", "q": 5, "s": "(1 2 3)"}]}
    assert stickel.ledger_demo(spec)["pass"] is True
    cfg = {"groups": ["C3"], "factorization_groups": ["C3"], "ledger_groups": ["S3"],
           "primes": [5], "crux": [[7, 3]], "e_values": [3], "ledger_cases": 2}
    r = stickel.run_suite(tmp_path / "out", cfg)
    assert r["pass"] is True
    assert json.loads((tmp_path / "out" / "summary.json").read_text())["pass"] is True
    with pytest.raises(stickel.ConfigError):
        stickel.run_suite(tmp_path / "bad", {"e_values": [2]})
