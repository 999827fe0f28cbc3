"""Coefficient scalars: arbitrary-precision rationals with an exactness flag.

Every scalar stores an exact ``Fraction``.  Values that are irrational in
exact arithmetic (roots of non-perfect powers, transcendental function
values at nonzero rational points) are rounded to a rational at a
configurable binary precision P and flagged inexact.  Sign queries on
inexact scalars closer to zero than ``2**(8 - P)`` raise
:class:`~fermatreal.errors.ApproximationTie` instead of guessing.
"""

from __future__ import annotations

import math
from fractions import Fraction

import gmpy2
import mpmath

from .errors import ApproximationTie, DomainError

_precision = 192

# Inexact values are stored with this many bits beyond P so that rounding
# noise from a handful of chained roundings stays far below the comparison
# thresholds derived from P.
GUARD_BITS = 64


def set_precision(bits: int) -> None:
    global _precision
    if bits < 32:
        raise DomainError("precision must be at least 32 bits")
    _precision = int(bits)


def get_precision() -> int:
    return _precision


def tie_threshold() -> Fraction:
    """Below this gap, two inexact scalars cannot be ordered reliably."""
    return Fraction(1, 1 << (_precision - 8))


def drop_threshold() -> Fraction:
    """Inexact coefficients below this magnitude are treated as zero."""
    return Fraction(1, 1 << (_precision + 32))


def working_prec() -> int:
    return _precision + GUARD_BITS


def mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def approx(thunk) -> "Scalar":
    """Evaluate a 0-argument mpmath expression at working precision."""
    with mpmath.workprec(working_prec()):
        return Scalar(mpf_to_fraction(thunk()), exact=False)


class Scalar:
    """An exact rational together with a flag recording exactness."""

    __slots__ = ("value", "exact")

    def __init__(self, value, exact: bool = True):
        if isinstance(value, Scalar):
            self.value = value.value
            self.exact = value.exact and exact
            return
        self.value = Fraction(value)
        self.exact = bool(exact)

    @staticmethod
    def of(x) -> "Scalar":
        return x if isinstance(x, Scalar) else Scalar(x)

    def is_zero(self) -> bool:
        return self.value == 0

    def sign(self) -> int:
        """Sign in {-1, 0, 1}; raises ApproximationTie in the grey zone."""
        v = self.value
        if v == 0:
            return 0
        if not self.exact and abs(v) < tie_threshold():
            raise ApproximationTie(
                f"inexact value {float(v):.3e} is below the resolution "
                f"of the working precision ({_precision} bits)"
            )
        return 1 if v > 0 else -1

    def eq(self, other: "Scalar") -> bool:
        """Equality; inexact operands compare up to the tie threshold."""
        other = Scalar.of(other)
        if self.exact and other.exact:
            return self.value == other.value
        gap = abs(self.value - other.value)
        scale = max(Fraction(1), abs(self.value), abs(other.value))
        return gap <= tie_threshold() * scale

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.eq(Scalar.of(other))
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        other = Scalar.of(other)
        return Scalar(self.value + other.value, self.exact and other.exact)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.of(other)
        return Scalar(self.value - other.value, self.exact and other.exact)

    def __mul__(self, other):
        other = Scalar.of(other)
        return Scalar(self.value * other.value, self.exact and other.exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.of(other)
        if other.value == 0:
            raise DomainError("scalar division by zero")
        return Scalar(self.value / other.value, self.exact and other.exact)

    def __neg__(self):
        return Scalar(-self.value, self.exact)

    def __abs__(self):
        return Scalar(abs(self.value), self.exact)

    def __repr__(self):
        tag = "" if self.exact else "~"
        return f"{tag}{self.value}"


def scalar_pow(s: Scalar, p: Fraction) -> Scalar:
    """s**p for rational p.  Negative bases need an odd root index."""
    p = Fraction(p)
    if s.value == 0:
        if p > 0:
            return Scalar(0, s.exact)
        raise DomainError("0 cannot be raised to a non-positive exponent")
    if s.value < 0 and p.denominator % 2 == 0:
        raise DomainError(
            f"even root of the negative value {s.value} is not real"
        )
    v = s.value ** p.numerator
    n = p.denominator
    if n == 1:
        return Scalar(v, s.exact)
    neg = v < 0
    a = -v if neg else v
    rnum, num_exact = gmpy2.iroot(gmpy2.mpz(a.numerator), n)
    rden, den_exact = gmpy2.iroot(gmpy2.mpz(a.denominator), n)
    if s.exact and num_exact and den_exact:
        root = Fraction(int(rnum), int(rden))
        return Scalar(-root if neg else root, True)
    r = approx(lambda: mpmath.root(mpmath.mpf(a.numerator) / a.denominator, n))
    return Scalar(-r.value if neg else r.value, False)


def scalar_floor(s: Scalar) -> int:
    return math.floor(s.value)
