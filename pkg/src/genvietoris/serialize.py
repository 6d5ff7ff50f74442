"""Stable text encodings shared by the report types and the CLI."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

SCHEMA_VERSION = 1
FLOAT_DIGITS = 12


def rational_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_float(x: float) -> str:
    """Fixed 12 significant digits so output is byte-stable."""
    if x != x:
        return "nan"
    if x in (float("inf"), float("-inf")):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{FLOAT_DIGITS}g}"


def json_float(x: float):
    """Float rounded to 12 significant digits; non-finite values become null."""
    if x != x or x in (float("inf"), float("-inf")):
        return None
    return float(fmt_float(x))


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def dump_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
