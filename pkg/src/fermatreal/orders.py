"""Harmonic arithmetic on infinitesimal orders.

Orders combine through reciprocals: the product of infinitesimals of
orders a and b has order ab/(a+b).  The neutral element is infinity,
which stands for the order of a nonzero real number.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


class ExtendedOrder:
    """A positive rational order, or infinity (``value is None``)."""

    __slots__ = ("value",)

    def __init__(self, value):
        if value is None:
            self.value = None
        else:
            v = Fraction(value)
            if v <= 0:
                raise DomainError(f"order must be positive, got {v}")
            self.value = v

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, ExtendedOrder):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == Fraction(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "inf" if self.value is None else str(self.value)


INF = ExtendedOrder(None)


def _coerce(a) -> ExtendedOrder:
    return a if isinstance(a, ExtendedOrder) else ExtendedOrder(a)


def oplus(a, b) -> ExtendedOrder:
    """Harmonic sum: 1/(1/a + 1/b), with infinity as neutral element."""
    a, b = _coerce(a), _coerce(b)
    if a.is_infinite:
        return b
    if b.is_infinite:
        return a
    return ExtendedOrder(hsum(a.value, b.value))


def ominus(a, b) -> ExtendedOrder:
    """Harmonic difference: 1/(1/a - 1/b).  Requires a <= b."""
    a, b = _coerce(a), _coerce(b)
    if a.is_infinite:
        if b.is_infinite:
            raise DomainError("inf ominus inf is undefined")
        raise DomainError("ominus requires the first order to be <= the second")
    if b.is_infinite:
        return a
    d = hdiff(a.value, b.value)
    return INF if d is None else ExtendedOrder(d)


def odot(a, b) -> ExtendedOrder:
    """Ordinary product of orders, absorbing infinity."""
    a, b = _coerce(a), _coerce(b)
    if a.is_infinite or b.is_infinite:
        return INF
    return ExtendedOrder(a.value * b.value)


def hsum(a: Fraction, b: Fraction) -> Fraction:
    return a * b / (a + b)


def hdiff(a: Fraction, b: Fraction):
    """1/(1/a - 1/b) for a <= b; None encodes infinity when a == b."""
    if a > b:
        raise DomainError(f"harmonic difference needs {a} <= {b}")
    if a == b:
        return None
    return a * b / (b - a)
