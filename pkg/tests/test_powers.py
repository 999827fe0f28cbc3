from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from fermatreal import (
    ZERO,
    DomainError,
    ZeroBase,
    binom,
    dt,
    eq_up_to,
    fermat,
    is_complete,
    k_bound,
    loses_information,
    loses_information_multinomial,
    no_term_vanishes,
    nthroot,
    pow_nat,
    power,
    power_from_representation,
    sqrt,
)
from fermatreal.errors import IndexOutOfRange

from conftest import infinitesimals, orders


class TestBinom:
    def test_values(self):
        assert binom(F(1, 2), 0) == 1
        assert binom(F(1, 2), 1) == F(1, 2)
        assert binom(F(1, 2), 2) == F(-1, 8)
        assert binom(F(1, 2), 3) == F(1, 16)
        assert binom(3, 4) == 0


class TestWorkedRoots:
    def test_sqrt_dt(self):
        assert sqrt(dt(1)) == dt(2)

    def test_sqrt_two_terms(self):
        assert sqrt(dt(2) + dt(1)) == dt(4) + F(1, 2) * dt(F(4, 3))

    def test_sqrt_three_terms(self):
        got = sqrt(dt(2) - dt(F(3, 2)) - dt(1))
        want = (
            dt(4)
            - F(1, 2) * dt(F(12, 5))
            - F(1, 8) * dt(F(12, 7))
            - F(9, 16) * dt(F(4, 3))
            - F(37, 128) * dt(F(12, 11))
        )
        assert got == want

    def test_sqrt_of_square(self):
        x = dt(3) + dt(F(3, 2))
        assert sqrt(x * x) == dt(3) + dt(F(3, 2)) - F(1, 2) * dt(1)

    def test_sqrt_with_coefficient_two(self):
        got = sqrt(dt(3) + 2 * dt(2))
        want = (
            dt(6)
            + dt(3)
            - F(1, 2) * dt(2)
            + F(1, 2) * dt(F(3, 2))
            - F(5, 8) * dt(F(6, 5))
            + F(7, 8) * dt(1)
        )
        assert got == want

    def test_odd_root_of_negative(self):
        y = nthroot(-4 * dt(1), 3)
        assert len(y.terms) == 1
        assert y.terms[0].order == 3
        assert not y.terms[0].coef.exact
        # cube of the root recovers -4*dt up to rounding
        assert pow_nat(y, 3) == -4 * dt(1)

    def test_even_root_of_negative_rejected(self):
        with pytest.raises(DomainError):
            sqrt(-dt(1))

    def test_zero_base(self):
        assert power(ZERO, F(1, 2)).is_zero()
        with pytest.raises(ZeroBase):
            power(ZERO, F(-1, 2))

    def test_infinitesimal_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            power(dt(2), F(-1, 2))


class TestUnitPowers:
    def test_unit_rational_power(self):
        x = 4 + dt(1)
        y = power(x, F(1, 2))
        assert y.std.value == 2
        assert y * y == x

    def test_unit_negative_exponent(self):
        x = 2 + dt(2)
        assert power(x, F(-1, 1)) * x == fermat(1)

    def test_negative_unit_odd_root(self):
        x = -8 + dt(1)
        y = power(x, F(1, 3))
        assert y.std.value == -2
        assert pow_nat(y, 3) == x


class TestKBound:
    def test_values(self):
        assert k_bound(dt(2) + dt(1), F(1, 2)) == 2
        assert k_bound(dt(3) + 2 * dt(2), F(1, 2)) == 6
        assert k_bound(dt(3) + dt(2), 2) == 2
        assert k_bound(dt(2), F(1, 2)) == 0
        assert k_bound(fermat(3), F(1, 2)) == 0


class TestInformationLoss:
    def test_leading_term(self):
        assert loses_information(dt(1), 2, 1)
        assert not loses_information(dt(2), 2, 1)

    def test_second_term(self):
        # the trailing dt leaves no trace in the square root of dt_2 + dt
        assert loses_information(dt(2) + dt(1), 2, 2)
        assert not loses_information(dt(4) + dt(2), 2, 2)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            loses_information(dt(2) + dt(1), 2, 3)

    def test_multinomial_agrees(self):
        import math

        from fermatreal.orders import hdiff

        for x in (
            dt(2) + dt(1),
            dt(4) + dt(2),
            dt(3) + dt(2) + dt(F(3, 2)),
            dt(6) + dt(3) + dt(2),
        ):
            cap = math.ceil(hdiff(x.terms[1].order, x.terms[0].order))
            for q in (2, 3):
                if q > cap:
                    continue
                for r in range(1, len(x.terms)):
                    assert loses_information_multinomial(x, q, r) == loses_information(
                        x, F(q), r + 1
                    )

    def test_completeness(self):
        assert not is_complete(dt(2) + dt(1), 2)
        assert is_complete(dt(4) + dt(2), 2)
        assert is_complete(1 + dt(1), 2)


class TestCompletenessTheorems:
    def test_complete_round_trip_exact(self):
        x = dt(4) + dt(2)
        assert pow_nat(sqrt(x), 2) == x

    def test_incomplete_can_fail(self):
        # a vanished leading term cannot be recovered
        x = dt(1)
        assert not is_complete(x, 2)
        assert pow_nat(sqrt(x * x), 2) != x * x or sqrt(pow_nat(x, 2)) != x

    def test_product_rule_under_no_vanishing(self):
        x = dt(8) + dt(4)
        y = dt(6) + dt(3)
        assert no_term_vanishes(x, y)
        p = F(1, 2)
        assert power(x * y, p) == power(x, p) * power(y, p)

    def test_no_term_vanishes_detects_loss(self):
        assert not no_term_vanishes(dt(2) + dt(1), dt(2))
        assert no_term_vanishes(dt(4), dt(2))


class TestRepresentationIndependence:
    def test_formula_on_raw_representation(self):
        # same element written with a redundant split of the trailing term
        x = dt(2) + dt(1)
        raw = [(1, F(2)), (F(1, 2), F(1)), (F(1, 2), F(1))]
        assert power_from_representation(raw, F(1, 2)) == sqrt(x)

    def test_dominance_required(self):
        with pytest.raises(DomainError):
            power_from_representation([(1, F(2)), (1, F(3))], F(1, 2))


class TestRoundTrips:
    @given(infinitesimals(positive=True))
    @settings(max_examples=60, deadline=None)
    def test_right_inverse(self, x):
        for p in (F(1, 2), F(1, 3)):
            if k_bound(x, p) > 16:
                continue
            assert power(power(x, p), 1 / p) == x

    @given(infinitesimals(positive=True))
    @settings(max_examples=60, deadline=None)
    def test_left_inverse_up_to(self, x):
        for p in (F(1, 2), F(1, 3)):
            if k_bound(x, p) > 16:
                continue
            inner = power(x, 1 / p)
            if inner.is_zero():
                continue
            y = power(inner, p)
            k = max(x.order_i(2), y.order_i(2))
            assert eq_up_to(k, x, y)

    @given(orders(), orders())
    @settings(max_examples=60, deadline=None)
    def test_pure_dt_law(self, a, b):
        # dt_a ** p = dt_{a/p}, falling to zero below order 1
        for p in (F(1, 2), F(2, 3), F(3, 2), F(3)):
            expected = dt(a / p) if a / p >= 1 else ZERO
            assert power(dt(a), p) == expected
