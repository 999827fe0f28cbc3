"""Fractional integrals and Caputo derivatives of power functions.

Works with finite sums of real powers of (x - a).  Coefficients live in
a small symbolic field: rationals times products of Gamma values at
rational arguments, kept unevaluated so that the ubiquitous
Gamma-quotients cancel exactly.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import mpmath

from .core import FermatReal, compare, fermat
from .errors import (
    DomainError,
    NotInfinitesimal,
    PreconditionViolated,
    UnsupportedAlpha,
    UnsupportedExponent,
)
from .powers import power
from .scalar import Scalar, approx


class GammaRational:
    """A rational multiple of a quotient of Gamma values.

    Factors are normalized into (0, 1] with the functional equation
    Gamma(z + 1) = z * Gamma(z), then identical factors above and below
    the bar cancel.  Purely rational values have no factors left.
    """

    __slots__ = ("rat", "num", "den")

    def __init__(self, rat, num=(), den=()):
        rat = Fraction(rat)
        top = Counter()
        bot = Counter()
        for q in num:
            q, scale = self._reduce(Fraction(q))
            rat *= scale
            if q is not None:
                top[q] += 1
        for q in den:
            q, scale = self._reduce(Fraction(q))
            rat /= scale
            if q is not None:
                bot[q] += 1
        for q in list(top):
            common = min(top[q], bot.get(q, 0))
            if common:
                top[q] -= common
                bot[q] -= common
        if rat == 0:
            top = Counter()
            bot = Counter()
        self.rat = rat
        self.num = tuple(sorted(q for q in top.elements()))
        self.den = tuple(sorted(q for q in bot.elements()))

    @staticmethod
    def _reduce(q: Fraction):
        if q <= 0:
            raise DomainError(f"Gamma argument must be positive, got {q}")
        scale = Fraction(1)
        while q > 1:
            q -= 1
            scale *= q
        if q == 1:
            return None, scale
        return q, scale

    @classmethod
    def gamma(cls, q) -> "GammaRational":
        return cls(1, num=(q,))

    @classmethod
    def of(cls, x) -> "GammaRational":
        return x if isinstance(x, GammaRational) else cls(x)

    def is_zero(self) -> bool:
        return self.rat == 0

    def is_rational(self) -> bool:
        return not self.num and not self.den

    def __mul__(self, other):
        other = GammaRational.of(other)
        return GammaRational(
            self.rat * other.rat, self.num + other.num, self.den + other.den
        )

    def __truediv__(self, other):
        other = GammaRational.of(other)
        if other.rat == 0:
            raise DomainError("division by zero coefficient")
        return GammaRational(
            self.rat / other.rat, self.num + other.den, self.den + other.num
        )

    def __neg__(self):
        return GammaRational(-self.rat, self.num, self.den)

    def __add__(self, other):
        other = GammaRational.of(other)
        if self.rat == 0:
            return other
        if other.rat == 0:
            return self
        if self.num == other.num and self.den == other.den:
            return GammaRational(self.rat + other.rat, self.num, self.den)
        raise DomainError(
            "sum of coefficients with different Gamma factors is not representable"
        )

    def __eq__(self, other):
        other = GammaRational.of(other)
        return (
            self.rat == other.rat and self.num == other.num and self.den == other.den
        )

    __hash__ = None

    def to_scalar(self) -> Scalar:
        if self.is_rational():
            return Scalar(self.rat)
        rat = self.rat

        def value():
            out = mpmath.mpf(rat.numerator) / rat.denominator
            for q in self.num:
                out *= mpmath.gamma(mpmath.mpf(q.numerator) / q.denominator)
            for q in self.den:
                out /= mpmath.gamma(mpmath.mpf(q.numerator) / q.denominator)
            return out

        return approx(value)

    def __repr__(self):
        parts = [str(self.rat)]
        parts += [f"G({q})" for q in self.num]
        parts += [f"/G({q})" for q in self.den]
        return "*".join(parts)


class FracPoly:
    """A finite sum  sum_k  c_k * (x - a)**mu_k  with exponents mu_k >= 0."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base, terms):
        self.base = Fraction(base)
        acc = {}
        for coef, mu in terms:
            coef = GammaRational.of(coef)
            mu = Fraction(mu)
            if mu < 0:
                raise DomainError(f"exponent must be non-negative, got {mu}")
            if mu in acc:
                acc[mu] = acc[mu] + coef
            else:
                acc[mu] = coef
        self.coeffs = tuple(
            (acc[mu], mu) for mu in sorted(acc, reverse=True) if not acc[mu].is_zero()
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def value_at_base(self) -> GammaRational:
        """The constant term: the value of the sum at x = a."""
        for coef, mu in self.coeffs:
            if mu == 0:
                return coef
        return GammaRational(0)

    def __add__(self, other):
        if self.base != other.base:
            raise DomainError("cannot add power sums at different base points")
        return FracPoly(self.base, list(self.coeffs) + list(other.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, FracPoly)
            and self.base == other.base
            and len(self.coeffs) == len(other.coeffs)
            and all(
                mu == nu and c == d
                for (c, mu), (d, nu) in zip(self.coeffs, other.coeffs)
            )
        )

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for coef, mu in self.coeffs:
            if mu == 0:
                bits.append(f"{coef!r}")
            else:
                bits.append(f"{coef!r}*(x-{self.base})^{mu}")
        return " + ".join(bits)


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if alpha <= 0 or alpha > 1:
        raise UnsupportedAlpha(f"differentiation order must lie in (0, 1], got {alpha}")
    return alpha


def rl_integral(f: FracPoly, alpha) -> FracPoly:
    """Fractional integral of order alpha, applied termwise:
    (x-a)**mu picks up Gamma(mu+1)/Gamma(mu+alpha+1) and shifts up."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise DomainError("integral order must be non-negative")
    if alpha == 0:
        return f
    out = []
    for coef, mu in f.coeffs:
        factor = GammaRational.gamma(mu + 1) / GammaRational.gamma(mu + alpha + 1)
        out.append((coef * factor, mu + alpha))
    return FracPoly(f.base, out)


def caputo(f: FracPoly, alpha) -> FracPoly:
    """Caputo derivative of order alpha in (0, 1], applied termwise.

    Constants are annihilated; (x-a)**mu maps to
    Gamma(mu+1)/Gamma(mu-alpha+1) * (x-a)**(mu-alpha).  Exponents
    strictly between 0 and alpha would leave the representable class.
    """
    alpha = _check_alpha(alpha)
    out = []
    for coef, mu in f.coeffs:
        if mu == 0:
            continue
        if mu < alpha:
            raise UnsupportedExponent(
                f"exponent {mu} in (0, {alpha}) has no representable Caputo derivative"
            )
        factor = GammaRational.gamma(mu + 1) / GammaRational.gamma(mu - alpha + 1)
        out.append((coef * factor, mu - alpha))
    return FracPoly(f.base, out)


def caputo_iter(f: FracPoly, alpha, times: int) -> FracPoly:
    if times < 0:
        raise DomainError("iteration count must be non-negative")
    for _ in range(times):
        f = caputo(f, alpha)
    return f


def eval_at_infinitesimal(f: FracPoly, h) -> FermatReal:
    """Value of f at a + h for infinitesimal h >= 0, term by term."""
    h = fermat(h)
    if not h.is_infinitesimal():
        raise NotInfinitesimal("evaluation point must be infinitesimally close to the base")
    if compare(h, fermat(0)) < 0:
        raise DomainError("fractional powers need a non-negative displacement")
    acc = fermat(0)
    for coef, mu in f.coeffs:
        if mu == 0:
            acc = acc + fermat(coef.to_scalar())
        elif not h.is_zero():
            acc = acc + power(h, mu) * coef.to_scalar()
    return acc


class TaylorCheck:
    """Outcome of comparing a value with its fractional Taylor sum."""

    __slots__ = ("status", "residual")

    def __init__(self, status: str, residual=None):
        self.status = status  # "exact", "holds" or "fails"
        self.residual = residual

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"

    @property
    def holds(self) -> bool:
        return self.status in ("exact", "holds")

    def __repr__(self):
        if self.residual is None:
            return self.status
        return f"{self.status} (residual {float(self.residual):.3e})"


def taylor_fractional_check(
    f: FracPoly, alpha, n: int, h, tol=Fraction(1, 1 << 64)
) -> TaylorCheck:
    """Compare f(a + h) with its order-n fractional Taylor sum.

    The sum runs over i = 0..n with coefficients given by iterated
    Caputo derivatives at the base point, divided by Gamma(i*alpha + 1).
    Requires order(h) < (n + 1) * alpha so that the remainder vanishes.
    """
    alpha = _check_alpha(alpha)
    h = fermat(h)
    if not h.is_infinitesimal():
        raise NotInfinitesimal("displacement must be infinitesimal")
    if compare(h, fermat(0)) < 0:
        raise DomainError("displacement must be non-negative")
    if not h.is_zero() and not h.order() < (n + 1) * alpha:
        raise PreconditionViolated(
            "remainder does not vanish: order(h) must be below (n+1)*alpha"
        )
    lhs = eval_at_infinitesimal(f, h)
    symbolic = all(c.is_rational() for c, _ in f.coeffs)
    rhs = fermat(0)
    g = f
    for i in range(n + 1):
        if i:
            g = caputo(g, alpha)
        c = g.value_at_base() / GammaRational.gamma(i * alpha + 1)
        if not c.is_rational():
            symbolic = False
        if c.is_zero():
            continue
        if i == 0:
            rhs = rhs + fermat(c.to_scalar())
        elif not h.is_zero():
            rhs = rhs + power(h, i * alpha) * c.to_scalar()
    if symbolic and lhs == rhs and _all_exact(lhs) and _all_exact(rhs):
        return TaylorCheck("exact")
    diff = lhs - rhs
    residual = abs(diff.std.value)
    for t in diff.terms:
        residual = max(residual, abs(t.coef.value))
    if residual <= tol:
        return TaylorCheck("holds", residual)
    return TaylorCheck("fails", residual)


def _all_exact(x: FermatReal) -> bool:
    return x.std.exact and all(t.coef.exact for t in x.terms)
