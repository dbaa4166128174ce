import json
from pathlib import Path

import jsonschema
import pytest

import stcalc

SCHEMA = json.loads((Path(__file__).resolve().parents[2] / "docs" / "st-calc.schema.json").read_text())


def cli_json(*args):
    code, out, err = stcalc.run_cli([*args, "--format", "json"])
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


def test_fibonacci_values():
    assert [stcalc.fib(n, "1", "1") for n in range(8)] == ["0", "1", "1", "2", "3", "5", "8", "13"]
    assert stcalc.fib(3) == "s^2 + t"


def test_fibonomial_at_q_numbers():
    # s = 1 + q, t = -q at q = 2
    assert stcalc.binom(4, 2, "3", "-2") == "35"
    assert stcalc.binom(5, 2, "1", "1") == "15"


def test_polytopic_golden_rectangle():
    assert [stcalc.polytopic(n, 2, "1", "1") for n in range(8)] == ["0", "1", "2", "6", "15", "40", "104", "273"]


def test_bad_parameter_raises():
    with pytest.raises(ValueError):
        stcalc.fib(3, "x/", "1")


def test_case_ids():
    ids = stcalc.case_ids()
    assert len(ids) >= 45
    assert ids == sorted(ids)
    assert "s6.warnaar_eq21" in ids


def test_verify_filter():
    rep = stcalc.verify(order=6, filter="schlosser")
    assert [c["id"] for c in rep["cases"]] == ["s6.schlosser_q_squares"]
    assert rep["cases"][0]["status"] == "pass"


def test_verify_rejects_low_order():
    with pytest.raises(ValueError):
        stcalc.verify(order=3)


def test_seq_json_matches_schema():
    doc = cli_json("seq", "fib", "--s", "1", "--t", "2", "--count", "8")
    assert doc["kind"] == "seq"
    assert doc["checks"][0]["mismatches"][0]["n"] == 3


def test_eval_json_matches_schema():
    doc = cli_json("eval", "polytopic-ogf", "2", "--s", "2", "--t", "-1", "--order", "4")
    assert doc["coefficients"] == ["1", "3", "6", "10", "15"]


def test_verify_and_show_json_match_schema():
    doc = cli_json("verify", "--order", "5", "--filter", "cubes")
    assert doc["kind"] == "verify"
    assert all(c["status"] == "pass" for c in doc["cases"])
    for what in (["cases"], ["case", "s2.theorem1"], ["specializations"], ["lists"]):
        cli_json("show", *what)


def test_usage_error_exit_code():
    code, _, err = stcalc.run_cli(["seq", "polytopic"])
    assert code == 2
    assert "--d" in err
