from fractions import Fraction as F

import pytest

from fermatreal import (
    DomainError,
    SmoothFunction,
    builtin,
    dt,
    ext,
    fermat,
    pow_nat,
)
from fermatreal.errors import UnknownFunction
from fermatreal.scalar import Scalar


class TestBuiltins:
    def test_registry(self):
        assert builtin("sin").name == "sin"
        with pytest.raises(UnknownFunction):
            builtin("tanh")

    def test_sin_at_infinitesimal(self):
        h = dt(3)
        # sin h = h - h^3/6
        assert ext(builtin("sin"), h) == h - pow_nat(h, 3) * F(1, 6)

    def test_cos_at_infinitesimal(self):
        h = dt(2)
        assert ext(builtin("cos"), h) == 1 - pow_nat(h, 2) * F(1, 2)

    def test_exp_at_infinitesimal(self):
        h = dt(2)
        assert ext(builtin("exp"), h) == 1 + h + pow_nat(h, 2) * F(1, 2)

    def test_log_near_one(self):
        h = dt(2)
        got = ext(builtin("log"), 1 + h)
        assert got == h - pow_nat(h, 2) * F(1, 2)

    def test_log1p_matches_log(self):
        h = dt(3)
        assert ext(builtin("log1p"), h) == ext(builtin("log"), 1 + h)

    def test_log_domain(self):
        with pytest.raises(DomainError):
            ext(builtin("log"), -1 + dt(2))

    def test_depth_follows_order(self):
        # order below 2 cuts the series after the linear term
        h = dt(F(3, 2))
        assert ext(builtin("exp"), h) == 1 + h

    def test_inexact_away_from_zero(self):
        v = ext(builtin("sin"), 1 + dt(1))
        assert not v.std.exact
        assert not v.terms[0].coef.exact

    def test_value_on_reals_is_plain_evaluation(self):
        import math

        v = ext(builtin("exp"), fermat(1))
        assert float(v.std.value) == pytest.approx(math.e)


class TestCustomFunction:
    def test_polynomial_oracle(self):
        # f(t) = t^2 through its derivative table
        def oracle(point, n):
            t = point.value
            return Scalar([t * t, 2 * t, 2][n] if n <= 2 else 0, point.exact)

        f = SmoothFunction("square", oracle)
        x = 3 + dt(2) + dt(1)
        assert ext(f, x) == x * x

    def test_domain_guard(self):
        f = SmoothFunction(
            "guarded", lambda p, n: Scalar(0), domain=lambda p: p.value > 0
        )
        with pytest.raises(DomainError):
            ext(f, fermat(-1))


class TestCompositionConsistency:
    def test_addition_formula(self):
        # sin(a + h) expanded directly agrees with the angle-sum identity
        h = dt(2)
        lhs = ext(builtin("sin"), 1 + h)
        sin1 = ext(builtin("sin"), fermat(1))
        cos1 = ext(builtin("cos"), fermat(1))
        rhs = sin1 * ext(builtin("cos"), h) + cos1 * ext(builtin("sin"), h)
        assert lhs == rhs

    def test_exp_is_multiplicative(self):
        h1 = dt(2)
        h2 = dt(3)
        e = builtin("exp")
        assert ext(e, h1 + h2) == ext(e, h1) * ext(e, h2)
