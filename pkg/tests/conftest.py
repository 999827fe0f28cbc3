"""Shared hypothesis strategies for building ring elements."""

from fractions import Fraction

from hypothesis import strategies as st

from fermatreal import normalize
from fermatreal.scalar import Scalar


@st.composite
def fractions(draw, max_num=20, max_den=20, nonzero=False):
    num = draw(st.integers(1 if nonzero else 0, max_num))
    den = draw(st.integers(1, max_den))
    sign = draw(st.sampled_from([1, -1]))
    return Fraction(sign * num, den)


@st.composite
def orders(draw, max_num=12, max_den=4):
    den = draw(st.integers(1, max_den))
    num = draw(st.integers(den, max_num * den))
    return Fraction(num, den)


@st.composite
def infinitesimals(draw, max_terms=3, allow_zero=False, positive=False):
    n = draw(st.integers(0 if allow_zero else 1, max_terms))
    os = draw(st.sets(orders(), min_size=n, max_size=n))
    raw = []
    for i, o in enumerate(sorted(os, reverse=True)):
        c = draw(fractions(nonzero=True))
        if positive and i == 0:
            c = abs(c)
        raw.append((Scalar(c), o))
    return normalize(0, raw)


@st.composite
def fermat_reals(draw, max_terms=3):
    x = draw(infinitesimals(max_terms=max_terms, allow_zero=True))
    return x + draw(fractions())
