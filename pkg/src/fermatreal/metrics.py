"""Distances and identification relations on the extended reals.

Two natural distances exist: the pseudometric that only sees standard
parts, and a genuine metric that adds the order of the difference, so
that distinct coinciding points are still separated.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .core import FermatReal, fermat
from .errors import NotInfinitesimal
from .scalar import working_prec


def d_std(x, y) -> Fraction:
    """Pseudometric: distance between the standard parts only."""
    x, y = fermat(x), fermat(y)
    return abs(x.std.value - y.std.value)


def d_omega(x, y) -> Fraction:
    """Metric: standard-part distance plus the order of the difference."""
    x, y = fermat(x), fermat(y)
    return d_std(x, y) + (x - y).order()


def d_higher(x, y, i: int) -> Fraction:
    """Family member number i; sees only the first i summands of the gap."""
    x, y = fermat(x), fermat(y)
    z = x - y
    total = d_std(x, y)
    for j in range(1, i + 1):
        total += z.order_i(j)
    return total


def eq_up_to(k, x, y) -> bool:
    """Identify x and y when they share a standard part and their gap
    consists of infinitesimals of order at most k."""
    k = Fraction(k)
    x, y = fermat(x), fermat(y)
    if not x.std.eq(y.std):
        return False
    return (x - y).order() <= k


def same_monad(x, y) -> bool:
    """Whether x and y differ by an infinitesimal."""
    return (fermat(x) - fermat(y)).is_infinitesimal()


class OmegaValue:
    """Value of the pseudovaluation -log omega, represented through the
    order itself so that no logarithm is ever approximated."""

    __slots__ = ("omega",)

    def __init__(self, omega):
        # omega is None for the valuation of zero (plus infinity)
        self.omega = None if omega is None else Fraction(omega)

    @property
    def is_infinite(self) -> bool:
        return self.omega is None

    def approx(self) -> float:
        if self.omega is None:
            return float("inf")
        with mpmath.workprec(working_prec()):
            return float(-mpmath.log(mpmath.mpf(self.omega.numerator) / self.omega.denominator))

    def __eq__(self, other):
        return isinstance(other, OmegaValue) and self.omega == other.omega

    def __hash__(self):
        return hash(self.omega)

    def __le__(self, other):
        # -log is antitone: larger omega means smaller valuation
        if self.omega is None:
            return True
        if other.omega is None:
            return False
        return self.omega >= other.omega

    def __lt__(self, other):
        return self <= other and self != other

    def __repr__(self):
        return "v(0) = +inf" if self.omega is None else f"-log({self.omega})"


def pseudovaluation(h: FermatReal) -> OmegaValue:
    """-log of the order, defined on infinitesimals, with v(0) infinite."""
    h = fermat(h)
    if not h.is_infinitesimal():
        raise NotInfinitesimal("the pseudovaluation is defined on infinitesimals")
    if h.is_zero():
        return OmegaValue(None)
    return OmegaValue(h.order())
