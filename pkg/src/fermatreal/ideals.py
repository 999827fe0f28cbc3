"""Ideals of nilpotent infinitesimals and their classification.

The infinitesimals of order below a + 1 form the ideal D_a; those of
order at most a form I_a.  All infinitesimals together form the unique
maximal ideal, and the quotient by it recovers the reals.
"""

from __future__ import annotations

from fractions import Fraction

from .core import fermat, pow_nat
from .errors import DomainError
from .scalar import Scalar


class IdealKind:
    """Tag for one of the ideal families, or the unit/zero ideal."""

    __slots__ = ("kind", "bound")

    def __init__(self, kind: str, bound=None):
        if kind not in ("Da", "Ia", "Dinf", "Unit", "Zero"):
            raise DomainError(f"unknown ideal kind {kind!r}")
        self.kind = kind
        self.bound = None if bound is None else Fraction(bound)

    def __eq__(self, other):
        return (
            isinstance(other, IdealKind)
            and self.kind == other.kind
            and self.bound == other.bound
        )

    def __hash__(self):
        return hash((self.kind, self.bound))

    def __repr__(self):
        if self.kind == "Da":
            return f"D_{self.bound}"
        if self.kind == "Ia":
            return f"I_{self.bound}"
        if self.kind == "Dinf":
            return "D_inf"
        return self.kind.lower()


UNIT_IDEAL = IdealKind("Unit")
ZERO_IDEAL = IdealKind("Zero")
D_INF = IdealKind("Dinf")


def Da(a) -> IdealKind:
    a = Fraction(a)
    if a <= 0:
        raise DomainError("D_a needs a positive index")
    return IdealKind("Da", a)


def Ia(a) -> IdealKind:
    a = Fraction(a)
    if a < 1:
        raise DomainError("I_a needs an index of at least 1")
    return IdealKind("Ia", a)


def in_Da(x, a) -> bool:
    """Membership in D_a: infinitesimal of order below a + 1."""
    x = fermat(x)
    a = Fraction(a)
    return x.is_infinitesimal() and x.order() < a + 1


def in_Ia(x, a) -> bool:
    """Membership in I_a: infinitesimal of order at most a."""
    x = fermat(x)
    a = Fraction(a)
    return x.is_infinitesimal() and x.order() <= a


def in_nilpotents_of_degree(x, k: int) -> bool:
    """Whether x**(k+1) == 0; for infinitesimals this is membership in D_k."""
    if k < 1:
        raise DomainError("degree must be a positive integer")
    return pow_nat(fermat(x), k + 1).is_zero()


def ideal_member(x, ideal: IdealKind) -> bool:
    x = fermat(x)
    if ideal.kind == "Unit":
        return True
    if ideal.kind == "Zero":
        return x.is_zero()
    if ideal.kind == "Dinf":
        return x.is_infinitesimal()
    if ideal.kind == "Da":
        return in_Da(x, ideal.bound)
    return in_Ia(x, ideal.bound)


def classify_generated(generators) -> IdealKind:
    """Classify the ideal generated by finitely many elements.

    Any unit generates everything; all-zero generators give the zero
    ideal; otherwise the ideal is I_a with a the largest order present.
    """
    gens = [fermat(g) for g in generators]
    if any(g.is_invertible() for g in gens):
        return UNIT_IDEAL
    if all(g.is_zero() for g in gens):
        return ZERO_IDEAL
    return Ia(max(g.order() for g in gens if not g.is_zero()))


def std_morphism(x) -> Scalar:
    """The quotient map onto the reals: forget the infinitesimal part."""
    return fermat(x).std
