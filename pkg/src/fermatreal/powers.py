"""Rational powers and roots of nilpotent infinitesimals.

The p-th power of an infinitesimal c with leading term ``c1 * dt_b`` is
computed by factoring out the leading term and expanding the remaining
unit binomially:

    c**p = c1**p * dt_{b/p} * (1 + u)**p,   u = (c - lead) / lead

The series is finite because u is nilpotent, and any summand whose
combined order falls below 1 vanishes.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import ONE, ZERO, FermatReal, Term, compare, fermat, normalize
from .errors import DomainError, IndexOutOfRange, ZeroBase
from .orders import hdiff, hsum
from .scalar import Scalar, scalar_pow


def binom(p: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= (p - i) / (i + 1)
    return out


def k_bound(c: FermatReal, p: Fraction) -> int:
    """Number of binomial summands that can survive in c**p.

    Zero for reals and single-term infinitesimals.  Otherwise the
    ceiling of the harmonic gap between the two leading orders, capped
    at p itself for natural p.
    """
    c = fermat(c)
    p = Fraction(p)
    if len(c.terms) < 2:
        return 0
    gap = hdiff(c.terms[1].order, c.terms[0].order)
    k = math.ceil(gap)
    if p.denominator == 1 and p > 0:
        k = min(k, p.numerator)
    return k


def _unit_power(u: FermatReal, p: Fraction, threshold: Fraction) -> FermatReal:
    """(1 + u)**p for nilpotent u, keeping only orders >= threshold.

    The powers of u are accumulated on the reciprocals of the orders: the
    order of a product is the harmonic sum, so its reciprocal is a plain
    sum.  Scaling every reciprocal to a common denominator turns the
    bookkeeping into integer dictionary merges, and any combination whose
    reciprocal exceeds 1/threshold is discarded before its coefficient is
    ever touched.
    """
    if u.is_zero():
        return ONE
    natural = p.denominator == 1 and p >= 0
    recips = [1 / t.order for t in u.terms]
    common = math.lcm(*(r.denominator for r in recips))
    steps = [
        (t.coef, r.numerator * (common // r.denominator))
        for t, r in zip(u.terms, recips)
    ]
    bound = Fraction(common) / threshold
    acc: dict = {}
    cur = {0: Scalar(1)}
    n = 0
    bcoef = Fraction(1)  # running binomial coefficient binom(p, n)
    while cur:
        n += 1
        if natural and n > p.numerator:
            break
        bcoef *= (p - n + 1) / n
        nxt: dict = {}
        for r1, c1 in cur.items():
            for coef, r2 in steps:
                r = r1 + r2
                if r > bound:
                    continue
                c = c1 * coef
                prev = nxt.get(r)
                nxt[r] = c if prev is None else prev + c
        if not nxt:
            break
        b = Scalar(bcoef)
        for r, c in nxt.items():
            c = c * b
            prev = acc.get(r)
            acc[r] = c if prev is None else prev + c
        cur = nxt
    return normalize(1, [(c, Fraction(common, r)) for r, c in acc.items()])


def power(c: FermatReal, p) -> FermatReal:
    """c**p for rational p.

    Units accept any rational exponent; infinitesimals need p > 0.
    Negative values need an odd root index.
    """
    c = fermat(c)
    p = Fraction(p)
    if p.denominator == 1:
        return c ** p.numerator
    if c.is_zero():
        if p > 0:
            return ZERO
        raise ZeroBase("0 cannot be raised to a non-positive exponent")
    if c.is_invertible():
        head = scalar_pow(c.std, p)
        u = c.infinitesimal_part() * (Scalar(1) / c.std)
        return _unit_power(u, p, Fraction(1)) * head
    if p <= 0:
        raise DomainError("infinitesimals only admit positive exponents")
    lead = c.terms[0]
    lead_order = lead.order / p
    if lead_order < 1:
        return ZERO
    head = scalar_pow(lead.coef, p)
    u = normalize(
        0,
        [(t.coef / lead.coef, hdiff(t.order, lead.order)) for t in c.terms[1:]],
    )
    if lead_order == 1:
        # every cross term falls below order 1
        return normalize(0, [(head, lead_order)])
    # a summand of the unit expansion survives only if its order combines
    # with the leading order to at least 1
    threshold = 1 / (1 - 1 / lead_order)
    unit = _unit_power(u, p, threshold)
    return unit * FermatReal(Scalar(0), (Term(head, lead_order),))


def power_from_representation(pairs, p) -> FermatReal:
    """Apply the power formula to a raw representation.

    ``pairs`` lists (coef, order) with the first entry strictly dominant.
    The element need not be in normal form; the result agrees with
    ``power`` applied to the normalized value.
    """
    p = Fraction(p)
    pairs = [(Scalar.of(c), Fraction(o)) for c, o in pairs]
    if not pairs:
        return power(ZERO, p)
    c1, b1 = pairs[0]
    if c1.value == 0:
        raise DomainError("leading coefficient of the representation is zero")
    if any(o >= b1 for _, o in pairs[1:]):
        raise DomainError("leading term of the representation must dominate")
    lead_order = b1 / p
    if lead_order < 1:
        return ZERO
    head = scalar_pow(c1, p)
    u = normalize(0, [(c / c1, hdiff(o, b1)) for c, o in pairs[1:]])
    if lead_order == 1:
        return normalize(0, [(head, lead_order)])
    threshold = 1 / (1 - 1 / lead_order)
    unit = _unit_power(u, p, threshold)
    return unit * FermatReal(Scalar(0), (Term(head, lead_order),))


def sqrt(c: FermatReal) -> FermatReal:
    return power(c, Fraction(1, 2))


def nthroot(c: FermatReal, n: int) -> FermatReal:
    if n < 1:
        raise DomainError("root index must be a positive integer")
    return power(c, Fraction(1, n))


def _compositions(total: int, parts: int):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def loses_information(x: FermatReal, inv_exp, r: int) -> bool:
    """Whether the r-th summand of x leaves no trace in x**(1/inv_exp)...

    More precisely: taking the root ``x**(1/q)`` with q = inv_exp > 1,
    does every expansion summand drawing on term r fall below order 1?
    The leading term is lost exactly when its order is below q; a later
    term is lost when every multi-index touching it combines, together
    with the leading order of the root, to a reciprocal sum beyond 1.
    """
    x = fermat(x)
    inv_exp = Fraction(inv_exp)
    if inv_exp <= 1:
        raise DomainError("the root denominator must exceed 1")
    if not x.is_infinitesimal() or x.is_zero():
        raise DomainError("information loss is defined for nonzero infinitesimals")
    n_terms = len(x.terms)
    if not 1 <= r <= n_terms:
        raise IndexOutOfRange(f"term index {r} not in 1..{n_terms}")
    beta = [t.order for t in x.terms]
    if r == 1:
        return beta[0] < inv_exp
    k = k_bound(x, inv_exp)
    lead_recip = inv_exp / beta[0]
    weights = [1 / beta[j] - 1 / beta[0] for j in range(1, n_terms)]
    for n in range(1, k + 1):
        for gamma in _compositions(n, n_terms - 1):
            if gamma[r - 2] == 0:
                continue
            recip = lead_recip + sum(g * w for g, w in zip(gamma, weights))
            if recip > 1:
                return True
    return False


def loses_information_multinomial(x: FermatReal, q: int, r: int) -> bool:
    """Multinomial reformulation of information loss for natural root q.

    Looks for eta in N^N with |eta| = q, eta_{r+1} != 0 and reciprocal
    order sum beyond 1.  Valid for q up to the binomial summand bound.
    """
    from .errors import PreconditionViolated

    x = fermat(x)
    if not x.is_infinitesimal() or x.is_zero():
        raise DomainError("information loss is defined for nonzero infinitesimals")
    n_terms = len(x.terms)
    if len(x.terms) < 2:
        raise PreconditionViolated("multinomial criterion needs at least two terms")
    if not (isinstance(q, int) and q >= 2):
        raise DomainError("q must be a natural number >= 2")
    if q > math.ceil(hdiff(x.terms[1].order, x.terms[0].order)):
        raise PreconditionViolated(
            "q exceeds the binomial summand bound for this element"
        )
    if not 1 <= r + 1 <= n_terms:
        raise IndexOutOfRange(f"term index {r + 1} not in 1..{n_terms}")
    beta = [t.order for t in x.terms]
    for eta in _compositions(q, n_terms):
        if eta[r] == 0:
            continue
        if sum(Fraction(e) / b for e, b in zip(eta, beta)) > 1:
            return True
    return False


def is_complete(x: FermatReal, inv_exp) -> bool:
    """True when no summand of x loses information in x**(1/inv_exp)."""
    x = fermat(x)
    if x.is_invertible():
        return True
    if x.is_zero():
        raise DomainError("completeness is defined for nonzero values")
    if compare(x, ZERO) < 0:
        raise DomainError("completeness is defined for positive infinitesimals")
    return not any(
        loses_information(x, inv_exp, r) for r in range(1, len(x.terms) + 1)
    )


def no_term_vanishes(x: FermatReal, y: FermatReal) -> bool:
    """True when every pairwise product of summands of x and y survives."""
    x, y = fermat(x), fermat(y)
    if x.is_zero() or y.is_zero() or not (x.is_infinitesimal() and y.is_infinitesimal()):
        raise DomainError("defined for nonzero infinitesimal pairs")
    return all(
        hsum(s.order, t.order) >= 1 for s in x.terms for t in y.terms
    )
