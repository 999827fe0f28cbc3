from fractions import Fraction as F

import pytest

from fermatreal import (
    FracPoly,
    GammaRational,
    caputo,
    caputo_iter,
    dt,
    eval_at_infinitesimal,
    fermat,
    rl_integral,
    taylor_fractional_check,
)
from fermatreal.errors import (
    DomainError,
    NotInfinitesimal,
    PreconditionViolated,
    UnsupportedAlpha,
    UnsupportedExponent,
)


class TestGammaRational:
    def test_functional_equation(self):
        # Gamma(7/2) reduces to 15/8 * Gamma(1/2)
        g = GammaRational.gamma(F(7, 2))
        assert g.rat == F(15, 8)
        assert g.num == (F(1, 2),)

    def test_integer_arguments_are_factorials(self):
        g = GammaRational.gamma(5)
        assert g.is_rational()
        assert g.rat == 24

    def test_cancellation(self):
        q = GammaRational.gamma(F(5, 3)) / GammaRational.gamma(F(5, 3))
        assert q.is_rational()
        assert q.rat == 1

    def test_shifted_cancellation(self):
        # Gamma(8/3) / Gamma(5/3) = 5/3
        q = GammaRational.gamma(F(8, 3)) / GammaRational.gamma(F(5, 3))
        assert q.is_rational()
        assert q.rat == F(5, 3)

    def test_add_requires_same_shape(self):
        a = GammaRational.gamma(F(1, 2))
        with pytest.raises(DomainError):
            a + GammaRational.gamma(F(1, 3))
        assert (a + a).rat == 2

    def test_numeric_value(self):
        import math

        s = GammaRational.gamma(F(1, 2)).to_scalar()
        assert not s.exact
        assert float(s.value) == pytest.approx(math.sqrt(math.pi))

    def test_positivity_guard(self):
        with pytest.raises(DomainError):
            GammaRational.gamma(0)


class TestOperators:
    def test_integral_shifts_exponent(self):
        f = FracPoly(0, [(1, F(3, 2))])
        g = rl_integral(f, F(1, 2))
        (coef, mu), = g.coeffs
        assert mu == 2
        # Gamma(5/2)/Gamma(3) = (3/4 sqrt(pi)) / 2
        assert coef == GammaRational(F(3, 8), num=(F(1, 2),))

    def test_integral_semigroup(self):
        f = FracPoly(0, [(2, F(1, 2)), (-1, F(0))])
        a, b = F(1, 3), F(2, 3)
        assert rl_integral(rl_integral(f, a), b) == rl_integral(f, a + b)

    def test_caputo_kills_constants(self):
        f = FracPoly(0, [(5, F(0))])
        assert caputo(f, F(1, 2)).is_zero()

    def test_caputo_power_rule(self):
        # D^(1/2) x = Gamma(2)/Gamma(3/2) x^(1/2)
        f = FracPoly(0, [(1, F(1))])
        g = caputo(f, F(1, 2))
        (coef, mu), = g.coeffs
        assert mu == F(1, 2)
        assert coef == GammaRational(1, den=(F(1, 2),)) * GammaRational(2)

    def test_caputo_rejects_small_exponents(self):
        f = FracPoly(0, [(1, F(1, 4))])
        with pytest.raises(UnsupportedExponent):
            caputo(f, F(1, 2))

    def test_alpha_range(self):
        f = FracPoly(0, [(1, F(2))])
        with pytest.raises(UnsupportedAlpha):
            caputo(f, F(3, 2))
        with pytest.raises(UnsupportedAlpha):
            caputo(f, 0)

    def test_caputo_iter_chain(self):
        f = FracPoly(0, [(1, F(3, 2))])
        g = caputo_iter(f, F(1, 2), 3)
        (coef, mu), = g.coeffs
        assert mu == 0
        assert coef == GammaRational.gamma(F(5, 2))
        assert caputo_iter(f, F(1, 2), 4).is_zero()

    def test_caputo_inverts_integral(self):
        f = FracPoly(0, [(3, F(5, 4)), (1, F(0))])
        alpha = F(3, 4)
        assert caputo(rl_integral(f, alpha), alpha) == f


class TestEvaluation:
    def test_polynomial_case(self):
        f = FracPoly(0, [(2, F(2)), (1, F(0))])
        h = dt(2)
        assert eval_at_infinitesimal(f, h) == 1 + 2 * h * h

    def test_fractional_powers(self):
        f = FracPoly(0, [(1, F(1, 2))])
        assert eval_at_infinitesimal(f, dt(2)) == dt(4)

    def test_rejects_non_infinitesimal(self):
        f = FracPoly(0, [(1, F(1))])
        with pytest.raises(NotInfinitesimal):
            eval_at_infinitesimal(f, fermat(1))

    def test_rejects_negative(self):
        f = FracPoly(0, [(1, F(1, 2))])
        with pytest.raises(DomainError):
            eval_at_infinitesimal(f, -dt(1))


class TestTaylor:
    def test_exact_on_matched_family(self):
        alpha = F(1, 2)
        f = FracPoly(0, [(3, F(0)), (2, alpha), (-1, 2 * alpha), (5, 3 * alpha)])
        h = dt(F(3, 2))
        result = taylor_fractional_check(f, alpha, 3, h)
        assert result.is_exact

    def test_precondition_on_order(self):
        f = FracPoly(0, [(1, F(1, 2))])
        with pytest.raises(PreconditionViolated):
            taylor_fractional_check(f, F(1, 2), 1, dt(2))

    def test_zero_displacement(self):
        f = FracPoly(0, [(1, F(0)), (1, F(1, 2))])
        assert taylor_fractional_check(f, F(1, 2), 1, fermat(0) * dt(1)).is_exact

    def test_classical_alpha_one(self):
        f = FracPoly(0, [(1, F(0)), (2, F(1)), (3, F(2))])
        h = dt(F(5, 2))
        assert taylor_fractional_check(f, F(1), 2, h).is_exact
