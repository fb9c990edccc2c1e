"""Canonical report emission: exact float round-trips and stable bytes."""

import json

from hypothesis import given, strategies as st

from conical_ab.reports import RunReport, canonical_json, format_float, rows_to_csv


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_formatting_reconstructs_double(x):
    assert float(format_float(x)) == x


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_formatting_is_idempotent(x):
    once = format_float(x)
    assert format_float(float(once)) == once


def test_canonical_json_types_and_order():
    obj = {"b": 1, "a": [True, False, None, 0.5, "x"], "c": {"k": 2.0}}
    text = canonical_json(obj)
    assert text == '{"b":1,"a":[true,false,null,0.5,"x"],"c":{"k":2}}'
    assert canonical_json(json.loads(text)) == text


def test_csv_mirrors_row_fields():
    rows = [{"m": 1, "energy": 0.5, "note": None}, {"m": 2, "energy": -0.25, "note": None}]
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "m,energy,note"
    assert lines[1] == "1,0.5,"


def test_report_render_roundtrip():
    report = RunReport(run_config={"command": "ring"}, rows=[{"m": 0, "energy": 0.1}])
    body = json.loads(report.to_json())
    assert set(body) == {"run_config", "rows", "diagnostics"}
    assert canonical_json(body) == report.to_json()
