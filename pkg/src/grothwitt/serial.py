"""JSON encodings shared by the CLI and the tests.

Rationals are written as strings ("3/2"); polynomials with constant term 1
list only the coefficients of t^1, t^2, ...
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import poly
from .rational import MotivicMeasurePoly, OnePoly, WittRational
from .witt import LambdaSeries


def rat_str(x) -> str:
    return str(Fraction(x))


def _load(obj):
    return json.loads(obj) if isinstance(obj, str) else obj


def series_to_json(f: LambdaSeries) -> list[str]:
    return [rat_str(c) for c in f.coeffs]


def series_from_json(obj, precision: int | None = None) -> LambdaSeries:
    obj = _load(obj)
    coeffs = poly.fracs(obj)
    n = precision or len(coeffs)
    return LambdaSeries.from_poly(coeffs, n)


def witt_rational_to_json(a: WittRational) -> dict:
    return {"num": [rat_str(c) for c in a.num.coeffs], "den": [rat_str(c) for c in a.den.coeffs]}


def witt_rational_from_json(obj) -> WittRational:
    obj = _load(obj)
    return WittRational(OnePoly(poly.fracs(obj.get("num", []))), OnePoly(poly.fracs(obj.get("den", []))))


def measure_to_json(m: MotivicMeasurePoly) -> dict:
    return {"T": [witt_rational_to_json(c) for c in m.coeffs]}


def measure_from_json(obj) -> MotivicMeasurePoly:
    obj = _load(obj)
    if isinstance(obj, dict) and "T" in obj:
        obj = obj["T"]
    return MotivicMeasurePoly(tuple(witt_rational_from_json(c) for c in obj))


def measures_from_json(obj) -> list[MotivicMeasurePoly]:
    """A list of measures, or {"measures": [...]}, or a single measure."""
    obj = _load(obj)
    if isinstance(obj, dict):
        obj = obj["measures"] if "measures" in obj else [obj]
    return [measure_from_json(m) for m in obj]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))
