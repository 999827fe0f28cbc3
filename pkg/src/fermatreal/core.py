"""The ring of reals extended by nilpotent infinitesimals.

Every element has a unique decomposition: a standard real part plus
finitely many terms ``c * dt_a`` with strictly decreasing orders a >= 1
and nonzero coefficients.  ``dt_a`` is the positive infinitesimal whose
a-th power is the first to vanish just past a; products follow
``dt_a * dt_b = dt_{ab/(a+b)}`` and any order that falls below 1
collapses to zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZero,
    DomainError,
    NoExactQuotient,
    NotInvertible,
    NotZeroDivisor,
    PreconditionViolated,
)
from .orders import hdiff, hsum
from .scalar import Scalar, drop_threshold


class Term:
    """One summand ``coef * dt_order`` of a decomposition."""

    __slots__ = ("coef", "order")

    def __init__(self, coef: Scalar, order: Fraction):
        self.coef = coef
        self.order = order

    def __repr__(self):
        return f"Term({self.coef!r}, {self.order})"


class FermatReal:
    """An element in normal form.  Build values via dt(), fermat(), normalize()."""

    __slots__ = ("std", "terms")

    def __init__(self, std: Scalar, terms: tuple):
        self.std = std
        self.terms = terms

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.std.value == 0 and not self.terms

    def is_real(self) -> bool:
        return not self.terms

    def is_infinitesimal(self) -> bool:
        return self.std.value == 0

    def is_invertible(self) -> bool:
        return self.std.value != 0

    def order(self) -> Fraction:
        """Leading order; 0 for real numbers by convention."""
        return self.terms[0].order if self.terms else Fraction(0)

    def order_i(self, i: int) -> Fraction:
        """Order of the i-th summand (1-based); 0 when out of range."""
        if 1 <= i <= len(self.terms):
            return self.terms[i - 1].order
        return Fraction(0)

    def std_part(self) -> Scalar:
        return self.std

    def std_part_i(self, i: int) -> Scalar:
        """Coefficient of the i-th summand (1-based); 0 when out of range."""
        if 1 <= i <= len(self.terms):
            return self.terms[i - 1].coef
        return Scalar(0)

    def infinitesimal_part(self) -> "FermatReal":
        return FermatReal(Scalar(0), self.terms)

    def decomposition(self):
        """The normal form as (std, [(coef, order), ...])."""
        return self.std, [(t.coef, t.order) for t in self.terms]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = fermat(other)
        raw = [(t.coef, t.order) for t in self.terms]
        raw += [(t.coef, t.order) for t in other.terms]
        return normalize(self.std + other.std, raw)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-fermat(other))

    def __rsub__(self, other):
        return fermat(other) + (-self)

    def __neg__(self):
        return FermatReal(-self.std, tuple(Term(-t.coef, t.order) for t in self.terms))

    def __mul__(self, other):
        other = fermat(other)
        raw = []
        if other.std.value != 0:
            raw += [(t.coef * other.std, t.order) for t in self.terms]
        if self.std.value != 0:
            raw += [(t.coef * self.std, t.order) for t in other.terms]
        for s in self.terms:
            for t in other.terms:
                o = hsum(s.order, t.order)
                if o >= 1:
                    raw.append((s.coef * t.coef, o))
        return normalize(self.std * other.std, raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return divide(self, fermat(other))

    def __rtruediv__(self, other):
        return divide(fermat(other), self)

    def __pow__(self, k):
        if isinstance(k, int):
            if k >= 0:
                return pow_nat(self, k)
            return pow_nat(invert(self), -k)
        from .powers import power  # deferred: powers builds on this module

        return power(self, Fraction(k))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (FermatReal, int, Fraction, Scalar)):
            return NotImplemented
        other = fermat(other)
        if not self.std.eq(other.std):
            return False
        mine = {t.order: t.coef for t in self.terms}
        theirs = {t.order: t.coef for t in other.terms}
        for o in set(mine) | set(theirs):
            if not mine.get(o, Scalar(0)).eq(theirs.get(o, Scalar(0))):
                return False
        return True

    __hash__ = None

    def __lt__(self, other):
        return compare(self, fermat(other)) < 0

    def __le__(self, other):
        return compare(self, fermat(other)) <= 0

    def __gt__(self, other):
        return compare(self, fermat(other)) > 0

    def __ge__(self, other):
        return compare(self, fermat(other)) >= 0

    def __abs__(self):
        return -self if compare(self, ZERO) < 0 else self

    def __repr__(self):
        from .formatting import format_decomposition

        return format_decomposition(self)


def fermat(x) -> FermatReal:
    """Coerce an int, Fraction or Scalar into the ring."""
    if isinstance(x, FermatReal):
        return x
    if isinstance(x, Scalar):
        return normalize(x, [])
    return normalize(Scalar(Fraction(x)), [])


def dt(a) -> FermatReal:
    """The basic infinitesimal of order a; zero when a < 1."""
    a = Fraction(a)
    if a < 0:
        raise DomainError(f"dt order must be non-negative, got {a}")
    if a < 1:
        return ZERO
    return FermatReal(Scalar(0), (Term(Scalar(1), a),))


def normalize(std, raw_terms) -> FermatReal:
    """Build the normal form from a standard part and raw (coef, order) pairs.

    Merges equal orders, removes zero coefficients and orders below 1,
    and sorts by strictly decreasing order.  Inexact coefficients whose
    magnitude falls below the drop threshold count as rounding residue
    and are removed.
    """
    std = Scalar.of(std)
    acc = {}
    for coef, order in raw_terms:
        coef = Scalar.of(coef)
        order = Fraction(order)
        if order < 1 or coef.value == 0:
            continue
        if order in acc:
            acc[order] = acc[order] + coef
        else:
            acc[order] = coef
    drop = drop_threshold()
    terms = []
    for order in sorted(acc, reverse=True):
        c = acc[order]
        if c.value == 0:
            continue
        if not c.exact and abs(c.value) < drop:
            continue
        terms.append(Term(c, order))
    if not std.exact and std.value != 0 and abs(std.value) < drop:
        std = Scalar(0, exact=False)
    return FermatReal(std, tuple(terms))


ZERO = FermatReal(Scalar(0), ())
ONE = FermatReal(Scalar(1), ())


def compare(x: FermatReal, y: FermatReal) -> int:
    """Total order: -1, 0 or 1.  Decided by the standard part, or failing
    that by the sign of the leading infinitesimal coefficient."""
    z = fermat(x) - fermat(y)
    s = z.std.sign()
    if s != 0:
        return s
    if not z.terms:
        return 0
    return z.terms[0].coef.sign()


def fmin(x, y):
    return x if compare(fermat(x), fermat(y)) <= 0 else y


def fmax(x, y):
    return x if compare(fermat(x), fermat(y)) >= 0 else y


def pow_nat(x: FermatReal, k: int) -> FermatReal:
    if k < 0:
        raise DomainError("pow_nat needs a non-negative exponent")
    out = ONE
    base = fermat(x)
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def invert(x: FermatReal) -> FermatReal:
    """Multiplicative inverse; defined exactly when the standard part is nonzero."""
    x = fermat(x)
    if not x.is_invertible():
        raise NotInvertible("only numbers with nonzero standard part are invertible")
    from .powers import _unit_power

    inv_std = Scalar(1, True) / x.std
    u = x.infinitesimal_part() * inv_std
    # geometric series (1 + u)**-1; finite because u is nilpotent
    return _unit_power(u, Fraction(-1), Fraction(1)) * inv_std


def divide(x: FermatReal, y: FermatReal) -> FermatReal:
    """Exact quotient x/y.  Units divide always; for an infinitesimal
    divisor a greedy order-shift is attempted and verified, raising
    NoExactQuotient when the quotient does not exist in the ring."""
    x, y = fermat(x), fermat(y)
    if y.is_zero():
        raise DivisionByZero("division by zero")
    if y.is_invertible():
        return x * invert(y)
    lead = y.terms[0]
    # peel off the dominant term: y = lead * (1 + h)
    h = normalize(
        0,
        [(t.coef / lead.coef, hdiff(t.order, lead.order)) for t in y.terms[1:]],
    )
    w = x * invert(ONE + h)
    if w.std.value != 0:
        raise NoExactQuotient("dividend has a real component the divisor cannot reach")
    q_std = Scalar(0)
    q_raw = []
    for t in w.terms:
        if t.order == lead.order:
            q_std = q_std + t.coef / lead.coef
        elif t.order < lead.order:
            o = hdiff(t.order, lead.order)
            if o >= 1:
                q_raw.append((t.coef / lead.coef, o))
        else:
            raise NoExactQuotient(
                f"no order produces dt_{t.order} when multiplied by dt_{lead.order}"
            )
    q = normalize(q_std, q_raw)
    if not (q * y == x):
        raise NoExactQuotient("verification failed: quotient candidate is lossy")
    return q


def solve_linear(a: FermatReal, b: FermatReal, c: FermatReal) -> FermatReal:
    """Solve a + x*b = c for x, given a < c < a + b."""
    a, b, c = fermat(a), fermat(b), fermat(c)
    if not (compare(a, c) < 0 and compare(c, a + b) < 0):
        raise PreconditionViolated("solve_linear needs a < c < a + b")
    return divide(c - a, b)


def zero_divisor_witness(x: FermatReal) -> FermatReal:
    """A nonzero y with x*y == 0; exists exactly for nonzero infinitesimals."""
    x = fermat(x)
    if x.is_zero() or x.is_invertible():
        raise NotZeroDivisor("only nonzero infinitesimals are zero divisors")
    return dt(1)
