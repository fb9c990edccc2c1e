"""Canonical machine-readable report emission (JSON and CSV).

Reports round-trip byte-identically: field order is fixed by insertion
order, floats are printed with 17 significant digits (enough to
reconstruct the double exactly, so reparse + re-emit is the identity) and
the two renderings of a run carry identical numeric values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any


def format_float(x: float) -> str:
    return f"{x:.17g}"


def _emit(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def canonical_json(obj: Any) -> str:
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(rows[0].keys())
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(row.get(k)) for k in header])
    return buf.getvalue()


@dataclass
class RunReport:
    """Outcome of one command: config echo, result rows, diagnostics."""

    run_config: dict
    rows: list[dict] = field(default_factory=list)
    diagnostics: list[dict] = field(default_factory=list)
    exit_code: int = 0

    def body(self) -> dict:
        return {
            "run_config": self.run_config,
            "rows": self.rows,
            "diagnostics": self.diagnostics,
        }

    def to_json(self) -> str:
        return canonical_json(self.body())

    def to_csv(self) -> str:
        return rows_to_csv(self.rows)

    def render(self, output_format: str) -> str:
        if output_format == "json":
            return self.to_json()
        if output_format == "csv":
            return self.to_csv()
        raise ValueError(f"unknown output format {output_format!r}")
