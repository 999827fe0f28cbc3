"""Random value generators shared by the self-check suites and the tests."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .core import FermatReal, normalize
from .orders import hdiff
from .scalar import Scalar


def rand_fraction(
    rng: random.Random, max_num=20, max_den=20, allow_neg=True, nonzero=False
) -> Fraction:
    num = rng.randint(1 if nonzero else 0, max_num)
    den = rng.randint(1, max_den)
    q = Fraction(num, den)
    if allow_neg and rng.random() < 0.5:
        q = -q
    return q


def rand_order(rng: random.Random, max_num=12, max_den=4) -> Fraction:
    """A random rational order >= 1 with small numerator and denominator."""
    den = rng.randint(1, max_den)
    num = rng.randint(den, max_num * den)
    return Fraction(num, den)


def rand_infinitesimal(
    rng: random.Random,
    max_terms=3,
    max_num=20,
    max_den=20,
    positive=False,
    allow_zero=False,
    max_order_num=12,
    max_order_den=4,
) -> FermatReal:
    n = rng.randint(0 if allow_zero else 1, max_terms)
    orders = set()
    while len(orders) < n:
        orders.add(rand_order(rng, max_order_num, max_order_den))
    raw = []
    for i, order in enumerate(sorted(orders, reverse=True)):
        coef = rand_fraction(rng, max_num, max_den, allow_neg=True, nonzero=True)
        if positive and i == 0:
            coef = abs(coef)
        raw.append((Scalar(coef), order))
    return normalize(0, raw)


def rand_fermat(rng: random.Random, max_terms=3, max_num=20, max_den=20) -> FermatReal:
    x = rand_infinitesimal(rng, max_terms, max_num, max_den, allow_zero=True)
    std = rand_fraction(rng, max_num, max_den)
    return x + std


def rand_root_friendly_infinitesimal(
    rng: random.Random, p: Fraction, max_terms=4, exact_lead=False
) -> FermatReal:
    """A positive infinitesimal whose root expansions stay small.

    With ``exact_lead`` the leading coefficient is a perfect power, so
    taking the p-th root introduces no rounding at all.
    """
    while True:
        x = rand_infinitesimal(
            rng,
            max_terms=max_terms,
            max_num=50,
            max_den=50,
            positive=True,
            max_order_num=10,
            max_order_den=4,
        )
        if len(x.terms) >= 2:
            gap = hdiff(x.terms[1].order, x.terms[0].order)
            if gap is not None and math.ceil(gap) > 24:
                continue
        if exact_lead:
            root = abs(rand_fraction(rng, 3, 3, nonzero=True))
            lead = root ** p.denominator
            if max(lead.numerator, lead.denominator) > 50:
                continue
            raw = [(Scalar(lead), x.terms[0].order)]
            raw += [(t.coef, t.order) for t in x.terms[1:]]
            x = normalize(0, raw)
        return x
