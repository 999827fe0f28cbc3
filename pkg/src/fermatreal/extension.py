"""Extending smooth real functions to the infinitesimally extended ring.

A smooth f acts on x = a + h (h the infinitesimal part) through its
finite Taylor expansion around a; nilpotency cuts the series off after
floor(order(h)) derivatives, so the value is computed exactly from
finitely many derivative values.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .core import ONE, FermatReal, fermat
from .errors import DomainError, UnknownFunction
from .scalar import Scalar, approx


class SmoothFunction:
    """A smooth function given by a derivative oracle.

    ``oracle(point, n)`` returns the n-th derivative at a rational point
    as a Scalar; ``domain(point)`` guards evaluation.
    """

    def __init__(self, name, oracle, domain=None):
        self.name = name
        self.oracle = oracle
        self.domain = domain

    def derivative(self, point: Scalar, n: int) -> Scalar:
        if self.domain is not None and not self.domain(point):
            raise DomainError(f"{self.name} is undefined at {point.value}")
        return self.oracle(point, n)

    def __repr__(self):
        return f"SmoothFunction({self.name})"


def ext(f: SmoothFunction, x) -> FermatReal:
    """Value of f at a + h: the Taylor sum up to floor(order(h))."""
    x = fermat(x)
    a = x.std
    acc = fermat(f.derivative(a, 0))
    h = x.infinitesimal_part()
    if h.is_zero():
        return acc
    depth = math.floor(h.order())
    hj = ONE
    fact = 1
    for j in range(1, depth + 1):
        hj = hj * h
        if hj.is_zero():
            break
        fact *= j
        c = f.derivative(a, j)
        if c.value != 0:
            acc = acc + hj * (c / Scalar(fact))
    return acc


_SIN_CYCLE = (Fraction(0), Fraction(1), Fraction(0), Fraction(-1))


def _sin_oracle(point: Scalar, n: int) -> Scalar:
    if point.exact and point.value == 0:
        return Scalar(_SIN_CYCLE[n % 4])
    v = point.value
    fn = (mpmath.sin, mpmath.cos)[n % 2]
    s = approx(lambda: fn(mpmath.mpf(v.numerator) / v.denominator))
    return -s if n % 4 in (2, 3) else s


def _cos_oracle(point: Scalar, n: int) -> Scalar:
    return _sin_oracle(point, n + 1)


def _exp_oracle(point: Scalar, n: int) -> Scalar:
    if point.exact and point.value == 0:
        return Scalar(1)
    v = point.value
    return approx(lambda: mpmath.exp(mpmath.mpf(v.numerator) / v.denominator))


def _log_oracle(point: Scalar, n: int) -> Scalar:
    v = point.value
    if n == 0:
        if point.exact and v == 1:
            return Scalar(0)
        return approx(lambda: mpmath.log(mpmath.mpf(v.numerator) / v.denominator))
    return Scalar(
        Fraction((-1) ** (n - 1) * math.factorial(n - 1)) / v**n, point.exact
    )


def _log1p_oracle(point: Scalar, n: int) -> Scalar:
    return _log_oracle(point + Scalar(1), n)


BUILTINS = {
    "sin": SmoothFunction("sin", _sin_oracle),
    "cos": SmoothFunction("cos", _cos_oracle),
    "exp": SmoothFunction("exp", _exp_oracle),
    "log": SmoothFunction("log", _log_oracle, domain=lambda p: p.value > 0),
    "log1p": SmoothFunction("log1p", _log1p_oracle, domain=lambda p: p.value > -1),
}


def builtin(name: str) -> SmoothFunction:
    try:
        return BUILTINS[name]
    except KeyError:
        raise UnknownFunction(f"no built-in smooth function named {name!r}") from None
