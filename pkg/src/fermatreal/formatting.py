"""Text rendering of decompositions.

The grammar is fixed so that output can be parsed back verbatim:
terms are joined with " + " / " - ", a coefficient of magnitude one is
omitted, order one prints as "dt", other orders as "dt_p" or "dt_p/q".
"""

from __future__ import annotations

from fractions import Fraction

from .core import FermatReal, fermat
from .scalar import Scalar


def rats(value, tol=Fraction(1, 10**9)) -> Fraction:
    """Shortest continued-fraction convergent within a relative tolerance.

    Mirrors the usual rational-reconstruction display of numeric
    toolboxes: useful for recognizing simple fractions behind rounded
    irrational coefficients.
    """
    value = Fraction(value)
    tol = Fraction(tol)
    limit = tol * max(Fraction(1), abs(value))
    if limit == 0:
        return value
    # walk the continued fraction, tracking convergents p/q
    a = value
    p_prev, q_prev = 1, 0
    p, q = int(a.numerator // a.denominator), 1
    frac = a - (a.numerator // a.denominator)
    while abs(Fraction(p, q) - value) > limit:
        if frac == 0:
            break
        a = 1 / frac
        digit = a.numerator // a.denominator
        frac = a - digit
        p, p_prev = digit * p + p_prev, p
        q, q_prev = digit * q + q_prev, q
    return Fraction(p, q)


def _format_order(order: Fraction) -> str:
    if order == 1:
        return "dt"
    if order.denominator == 1:
        return f"dt_{order.numerator}"
    return f"dt_{order.numerator}/{order.denominator}"


def _coef_value(coef: Scalar, use_rats: bool, tol) -> Fraction:
    if coef.exact or not use_rats:
        return coef.value
    return rats(coef.value, tol)


def format_scalar(s: Scalar, use_rats: bool = True, tol=Fraction(1, 10**9)) -> str:
    return str(_coef_value(s, use_rats, tol))


def format_decomposition(
    x: FermatReal, use_rats: bool = True, tol=Fraction(1, 10**9)
) -> str:
    x = fermat(x)
    pieces = []  # (sign, body) with sign in "+-"
    if x.std.value != 0:
        v = _coef_value(x.std, use_rats, tol)
        pieces.append(("-" if v < 0 else "+", str(abs(v))))
    for t in x.terms:
        v = _coef_value(t.coef, use_rats, tol)
        body = _format_order(t.order)
        if abs(v) != 1:
            body = f"{abs(v)}*{body}"
        pieces.append(("-" if v < 0 else "+", body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
