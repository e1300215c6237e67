import json
import os
import subprocess

import pytest

import jackpos


def test_binomial_example():
    assert jackpos.binomial((3, 1), (3,), 2) == "(2*t+2)/(t+2)"
    assert jackpos.binomial((2,), (1, 1), 2) == "0"
    assert jackpos.ratfun_eval("(2*t+2)/(t+2)", "1") == "4/3"
    assert jackpos.cone_member("(2*t+2)/(t+2)") == "member_positive"


def test_interp_constructions_agree():
    assert jackpos.interp((3, 2), 2, monic=True) == jackpos.interp_tableau((3, 2), 2)
    unital = jackpos.interp((1,), 1)
    assert unital["terms"] == [{"partition": [1], "coeff": "1"}]


def test_expansions():
    exp = jackpos.shifted_expansion((3, 1), 2)
    assert exp[(3,)] == "(2*t+2)/(t+2)"
    assert all(jackpos.binomial((3, 1), nu, 2) == c for nu, c in exp.items())
    diff = jackpos.difference_expansion((3, 1), (2,), 2)
    assert diff[(2, 1)] == "(2*t+6)/(t+2)"
    assert diff[(1,)] == "2"


def test_errors():
    with pytest.raises(jackpos.UnsupportedRange):
        jackpos.binomial((1, 1, 1), (1,), 2)
    with pytest.raises(ValueError):
        jackpos.ratfun_normalize("t+")


def test_table_and_verify():
    assert "(3,1),(3),2*t+2,t+2\n" in jackpos.binomial_table_csv(4, 2)
    table = jackpos.binomial_table(2, 2)
    for e in table["entries"]:
        zero = e["num"] == "0"
        assert zero != jackpos.contains(e["lambda"], e["nu"])
    report = jackpos.verify("thm2", 4, 2)
    assert report["pass"] and report["claim"] == "thm2"
    probe = jackpos.verify("conj-kt", 3, 2, tau="0,inf", grid="basic")
    assert probe["pass"] and "sampling probe" in probe["note"]


def test_cli_json_round_trip():
    cli = os.environ.get("JACKPOS_CLI")
    if not cli:
        pytest.skip("JACKPOS_CLI not set")
    out = subprocess.run([cli, "compute", "jack", "--shape", "2,1", "-n", "3", "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    poly = json.loads(out)
    assert jackpos.sympoly_normalize(poly) == poly
    assert poly == jackpos.jack((2, 1), 3)
