import json
import pathlib

import pytest

import oberwolfach

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def test_solve_and_verify():
    doc = oberwolfach.solve(14, "[2,4,8]")
    assert doc["verified"] is True
    assert len(doc["factors"]) == 13
    assert doc["factor_type"] == [2, 4, 8]
    assert oberwolfach.verify(doc)["passed"] is True


def test_nonexistent_and_bad_requests():
    with pytest.raises(oberwolfach.Nonexistent):
        oberwolfach.solve(6, "[6]")
    with pytest.raises(ValueError):
        oberwolfach.solve(12, "[12]")
    with pytest.raises(ValueError):
        oberwolfach.solve(14, "[3,11]")


def test_mutated_document_fails():
    doc = oberwolfach.solve(10, "[4,6]")
    cycle = doc["factors"][0][0]
    cycle[1], cycle[2] = cycle[2], cycle[1]
    report = oberwolfach.verify(doc)
    assert report["passed"] is False
    assert any(not c["ok"] for c in report["checks"])


def test_constructions():
    j = oberwolfach.j_decompose("[2,6,6]")
    assert j["host"] == {"kind": "JStar", "m": 7}
    assert len(j["external_pattern"]) == 9
    assert oberwolfach.verify(j)["passed"]
    assert len(oberwolfach.w_star("[14]")["factors"]) == 9
    assert len(oberwolfach.h_star("[2,4]")["factors"]) == 4
    assert oberwolfach.export("HStar", "[4,6]", "dot").count(" -> ") == 40


def test_fixture_and_tables():
    text = (FIXTURES / "pictured_4_8.json").read_text()
    assert oberwolfach.verify(text)["passed"]
    caps, rows, failures = oberwolfach.tables_check()
    assert (caps, rows, failures) == (16, 13, [])
    assert len(oberwolfach.tables()["right_caps"]) == 16


def test_helpers():
    assert oberwolfach.canonical_type("[4,2,2,2]") == "[2^3,4]"
    assert len(oberwolfach.even_partitions(18)) == 30
    assert json.dumps(oberwolfach.solve(6, "[2,4]"))
