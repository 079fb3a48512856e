"""Serialization of results: exact rationals as "num/den", deterministic JSON and CSV."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

from .laurent import LaurentPoly, format_laurent
from .poly import Poly, serialize


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, Poly):
        return serialize(obj)
    if isinstance(obj, LaurentPoly):
        return format_laurent(obj)
    if isinstance(obj, Counter):
        return {str(k): v for k, v in sorted(obj.items())}
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    if is_dataclass(obj):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def seq(values: Iterable) -> str:
    return ";".join("" if v is None else str(v) for v in values)


def to_csv(header: Sequence[str], rows: List[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
