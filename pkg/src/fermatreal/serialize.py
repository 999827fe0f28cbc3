"""Lossless JSON form of ring elements.

Schema: {"std": "p/q", "exact": bool,
         "terms": [{"coef": "p/q", "exact": bool, "order": "p/q"}, ...]}
Rationals travel as strings so that arbitrary precision survives.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import FermatReal, fermat, normalize
from .errors import ParseError
from .scalar import Scalar


def to_json(x: FermatReal) -> str:
    x = fermat(x)
    doc = {
        "std": str(x.std.value),
        "exact": x.std.exact,
        "terms": [
            {"coef": str(t.coef.value), "exact": t.coef.exact, "order": str(t.order)}
            for t in x.terms
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def _fraction(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: invalid rational {text!r} ({exc})") from None


def from_json(text: str) -> FermatReal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("std", "exact", "terms"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    if not isinstance(doc["exact"], bool):
        raise ParseError("'exact' must be a boolean")
    std = Scalar(_fraction(doc["std"], "std"), doc["exact"])
    if not isinstance(doc["terms"], list):
        raise ParseError("'terms' must be an array")
    raw = []
    for i, item in enumerate(doc["terms"]):
        where = f"terms[{i}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where}: expected an object")
        for key in ("coef", "order"):
            if key not in item:
                raise ParseError(f"{where}: missing key {key!r}")
        exact = item.get("exact", True)
        if not isinstance(exact, bool):
            raise ParseError(f"{where}: 'exact' must be a boolean")
        order = _fraction(item["order"], where)
        if order < 1:
            raise ParseError(f"{where}: order {order} is below 1")
        raw.append((Scalar(_fraction(item["coef"], where), exact), order))
    return normalize(std, raw)
