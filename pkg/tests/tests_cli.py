# Copyright 2026 The qutritshare Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os.path
import sys

import numpy as np
import pytest

###################
# Setup path data #
###################

tests_path = os.path.dirname(os.path.abspath(__file__))
base_path = os.path.abspath(os.path.join(tests_path, '../'))
sys.path.insert(0, base_path)

from qutritshare.algorithms.families import FamilyId, is_member  # noqa: E402
from qutritshare.channels.bases import BasisParams  # noqa: E402
from qutritshare.exceptions import ConfigError  # noqa: E402
from qutritshare.report.cli import ERROR_STATUS, main  # noqa: E402
from qutritshare.report.config import (parse_basis, parse_complex, parse_declared, parse_scheme,  # noqa: E402
                                       parse_u)

IDENTITY = "1,0,0,0,1,0,0,0,1"

TABLE_ETAS = ["1/10", "1/24", "1/12", "1/12", "1/12", "1/8", "1/8", "1/8"]

####################
# Helper Functions #
####################


def run_structured(capsys, argv):
    status = main(argv + ["-o", "structured"])
    out, _ = capsys.readouterr()
    return status, json.loads(out)


############
# Fixtures #
############


@pytest.fixture()
def rng():
    return np.random.default_rng(4)


#########
# Tests #
#########

def test_table1(capsys):
    status = main(["table1", "--seed", "3"])
    out, _ = capsys.readouterr()
    assert status == 0
    assert "status: PASS" in out


def test_table1_structured(capsys):
    status, doc = run_structured(capsys, ["table1", "--seed", "3"])
    assert status == 0
    assert len(doc["rows"]) == 8
    assert [row["eta"] for row in doc["rows"]] == TABLE_ETAS
    assert all(row["status"] == "PASS" for row in doc["rows"])
    assert doc["rows"][0]["NO"] == "2 GMs, SM, 2 SOs"
    assert doc["rows"][1]["QRC"] == "2 GBs"


def test_simulate_scheme1(capsys):
    status, doc = run_structured(capsys, ["simulate", "--scheme", "s1", "--seed", "7"])
    assert status == 0
    assert doc["branch_count"] == 243
    assert doc["total_probability"] == "1"
    assert doc["nominal_success_probability"] == "1"
    assert doc["success_probability"] == "1"
    assert doc["resources"]["eta"] == "1/10"
    assert all(b["probability"] == "1/243" for b in doc["branches"])
    assert doc["status"] == "OK"


def test_simulate_scheme2_arbitrary(capsys):
    status, doc = run_structured(capsys, ["simulate", "--scheme", "s2", "--seed", "7"])
    assert status == 0
    assert doc["basis"] == "xi(C1)"
    assert doc["branch_count"] == 81
    assert doc["nominal_success_probability"] == "1/3"
    assert doc["success_probability"] == "1/3"
    assert doc["resources"]["NO"] == "V, GM, 2 SMs, 3 SOs"


def test_simulate_scheme2_declared(capsys):
    status, doc = run_structured(capsys, ["simulate", "--scheme", "s2", "--u", "family:U1:0.3,1.1,2.0",
                                          "--chi", "0,0.6,0.8i", "--basis", "c1", "--declared", "u12"])
    assert status == 0
    assert doc["declared"] == FamilyId.U12
    assert doc["nominal_success_probability"] == "1"
    assert doc["success_probability"] == "1"
    assert doc["unsupported_claims"] == 0
    assert doc["resources"]["eta"] == "1/8"


def test_simulate_reports_unsupported_claims(capsys):
    status, doc = run_structured(capsys, ["simulate", "--scheme", "s2", "--u", "family:U1:0.3,1.1,2.0",
                                          "--chi", "0.6,0.48,0.64i", "--declared", "u12"])
    assert status == 0
    assert doc["unsupported_claims"] > 0


def test_simulate_human_report(capsys):
    status = main(["simulate", "--scheme", "s2", "--seed", "1", "--basis", "c4a", "--sample", "2"])
    out, _ = capsys.readouterr()
    assert status == 0
    assert "nominal P: 1/3" in out
    assert out.count("sample branch") == 2
    assert "status: OK" in out


def test_structured_output_is_deterministic(capsys):
    argv = ["simulate", "--scheme", "s2", "--seed", "11", "--sample", "4", "-o", "structured"]
    main(argv)
    first, _ = capsys.readouterr()
    main(argv)
    second, _ = capsys.readouterr()
    assert first == second
    assert len(json.loads(first)["samples"]) == 4


def test_classify_identity(capsys):
    status, doc = run_structured(capsys, ["classify", "--u", IDENTITY])
    assert status == 0
    assert doc["memberships"][:7] == [FamilyId.U1, FamilyId.U3, FamilyId.U4, FamilyId.U6, FamilyId.U7,
                                      FamilyId.U9, FamilyId.U10]
    assert FamilyId.U12 in doc["memberships"]
    assert doc["commutation"]["C1"]["W1(C1)"] == "Plus"
    assert doc["predicted_probability"]["C1"] == "1"


def test_classify_generic(capsys):
    status, doc = run_structured(capsys, ["classify", "--u", "random", "--seed", "2"])
    assert status == 0
    assert doc["memberships"] == []
    assert set(doc["predicted_probability"].values()) == {"1/3"}


def test_bases(capsys):
    status, doc = run_structured(capsys, ["bases"])
    assert status == 0
    cases = dict((case["case"], case) for case in doc["cases"])
    assert sorted(cases) == ["C1", "C2", "C3", "C4a", "C4b"]
    assert cases["C2"]["completed_by_cross_product"]
    assert not cases["C1"]["completed_by_cross_product"]
    assert all(w["scaled_unitary"] for w in cases["C4a"]["W"].values())
    assert not any(w["scaled_unitary"] for w in cases["C1"]["W"].values())


def test_non_unitary_operation_is_rejected(capsys):
    status = main(["simulate", "--scheme", "s1", "--u", "1,0,0,0,2,0,0,0,1"])
    out, _ = capsys.readouterr()
    assert status == ERROR_STATUS
    assert out == ""


def test_basis_is_rejected_for_scheme1(capsys):
    assert main(["simulate", "--scheme", "s1", "--basis", "c1"]) == ERROR_STATUS


def test_missing_command(capsys):
    assert main([]) == ERROR_STATUS


def test_parse_complex():
    assert parse_complex("0.6-0.8i") == complex(0.6, -0.8)
    assert parse_complex("i") == 1j
    assert parse_complex("-i") == -1j
    assert parse_complex("0.5+i") == complex(0.5, 1.0)
    assert parse_complex(" 2.5 ") == 2.5
    with pytest.raises(ConfigError):
        parse_complex("abc")


def test_parse_basis():
    assert parse_basis("C4A") == "C4a"
    p = parse_basis("xy:0,-0.7071067811865476")
    assert isinstance(p, BasisParams)
    assert abs(p.y1 + 0.7071067811865476) < 1e-12
    with pytest.raises(ConfigError):
        parse_basis("c9")
    with pytest.raises(ConfigError):
        parse_basis("xy:0.5")


def test_parse_declared_and_scheme():
    assert parse_declared("none") is None
    assert parse_declared(None) is None
    assert parse_declared("u34\\12") == FamilyId.U34_MINUS_12
    with pytest.raises(ConfigError):
        parse_declared("u99")
    assert parse_scheme("s2") == "S2"
    with pytest.raises(ConfigError):
        parse_scheme("s3")


def test_parse_u(rng):
    assert is_member(parse_u("family:u12", rng), FamilyId.U12)
    assert is_member(parse_u("family:U2:0.1,0.2,0.3", rng), FamilyId.U2)
    assert parse_u(IDENTITY, rng).allclose(np.eye(3))
    with pytest.raises(ConfigError):
        parse_u("family:u12:0.1,0.2,0.3", rng)
    with pytest.raises(ConfigError):
        parse_u("family:u99", rng)
    with pytest.raises(ConfigError):
        parse_u("1,0,0", rng)


def test_structured_output_round_trips(capsys):
    assert main(["table1", "-o", "structured"]) == 0
    text = capsys.readouterr().out
    again = json.dumps(json.loads(text), indent=4, separators=(',', ': ')) + "\n"
    assert again == text
