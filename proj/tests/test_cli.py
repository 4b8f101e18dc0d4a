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

"""Exit codes and output shape of the stickel command-line tool."""

import json
import os
import subprocess

import pytest

BIN = os.environ.get("STICKEL_BIN", "stickel")


def run(*args, cwd=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, cwd=cwd)


def test_chartab_json():
    r = run("chartab", "--group", "S3")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["certification"]["pass"] is True


def test_chartab_csv():
    r = run("chartab", "--group", "C3", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.count("\n") >= 2


def test_pairing_plain_and_star():
    assert run("pairing", "--group", "S3", "--s", "(1 2 3)").returncode == 0
    assert run("pairing", "--group", "S3", "--s", "(1 2 3)", "--star").returncode == 0


def test_star_pairing_on_even_order_is_usage_error():
    assert run("pairing", "--group", "S3", "--s", "(1 2)", "--star").returncode == 2


def test_localmodel_verify_modes():
    assert run("localmodel", "verify", "--e", "3", "--n", "-1").returncode == 0
    assert run("localmodel", "verify", "--e", "5", "--n", "0", "--p", "11").returncode == 0
    assert run("localmodel", "verify", "--group", "F21", "--s", "1", "--q", "2").returncode == 0
    assert run("localmodel", "verify", "--e", "3", "--n", "0", "--p", "5").returncode == 2


def test_gauss():
    r = run("gauss", "--p", "7", "--order", "3")
    assert r.returncode == 0
    assert run("gauss", "--p", "9").returncode == 2


def test_crux():
    r = run("crux", "--p", "7", "--e", "3")
    assert r.returncode == 0
    assert json.loads(r.stdout)["pass"] is True
    assert run("crux", "--p", "7", "--e", "2").returncode == 2


def test_ledger_demo(tmp_path):
    assert run("ledger", "demo").returncode == 0
    spec = {"group": "S3", "places": [{"label": "a", "q": 5, "s": "(1 2 3)"}]}
    f = tmp_path / "places.json"
    f.write_text(json.dumps(spec))
    assert run("ledger", "demo", "--places", str(f)).returncode == 0


def test_usage_errors():
    assert run().returncode == 2
    assert run("nosuch").returncode == 2
    assert run("chartab", "--group", "M11").returncode == 2
    assert run("chartab", "--format", "xml").returncode == 2
    assert run("--help").returncode == 0


def test_suite_small_config(tmp_path):
    cfg = {
        "groups": ["C3"],
        "factorization_groups": ["C3"],
        "ledger_groups": ["S3"],
        "primes": [5],
        "crux": [[7, 3]],
        "e_values": [3],
        "ledger_cases": 3,
    }
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    out = tmp_path / "reports"
    r = run("suite", "--config", str(f), "--out", str(out))
    assert r.returncode == 0, r.stdout + r.stderr
    summary = json.loads((out / "summary.json").read_text())
    assert summary["pass"] is True


@pytest.mark.parametrize(
    "cfg",
    [{"e_values": [4]}, {"groups": ["M11"]}, {"bogus": 1}],
)
def test_suite_rejects_bad_config(tmp_path, cfg):
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    r = run("suite", "--config", str(f), "--out", str(tmp_path / "o"))
    assert r.returncode == 2
    assert not (tmp_path / "o").exists()
