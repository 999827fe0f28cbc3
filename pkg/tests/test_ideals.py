from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from fermatreal import (
    IdealKind,
    ZERO,
    classify_generated,
    dt,
    fermat,
    ideal_member,
    in_Da,
    in_Ia,
    pow_nat,
    std_morphism,
)
from fermatreal.errors import DomainError
from fermatreal.ideals import (
    D_INF,
    Da,
    Ia,
    UNIT_IDEAL,
    ZERO_IDEAL,
    in_nilpotents_of_degree,
)

from conftest import fermat_reals


class TestMembership:
    def test_Da_is_strict(self):
        assert in_Da(dt(2), 2)
        assert in_Da(dt(F(5, 2)), 2)
        assert not in_Da(dt(3), 2)
        assert not in_Da(1 + dt(2), 2)

    def test_Ia_is_closed(self):
        assert in_Ia(dt(2), 2)
        assert not in_Ia(dt(F(5, 2)), 2)

    def test_nilpotent_degree_matches_order(self):
        # x**(k+1) == 0 exactly when the order stays below k + 1
        assert in_nilpotents_of_degree(dt(1), 1)
        assert not in_nilpotents_of_degree(dt(2), 1)
        assert in_nilpotents_of_degree(dt(2), 2)

    @given(fermat_reals())
    @settings(max_examples=120, deadline=None)
    def test_degree_criterion(self, x):
        for k in (1, 2, 3):
            predicted = x.is_zero() or (x.is_infinitesimal() and x.order() < k + 1)
            assert in_nilpotents_of_degree(x, k) == predicted


class TestClassification:
    def test_unit_wins(self):
        assert classify_generated([dt(2), 1 + dt(3)]) == UNIT_IDEAL

    def test_zero(self):
        assert classify_generated([ZERO, ZERO]) == ZERO_IDEAL

    def test_largest_order(self):
        assert classify_generated([dt(2), dt(3)]) == Ia(3)
        assert classify_generated([dt(2) + dt(1), ZERO]) == Ia(2)

    def test_invalid_kind(self):
        with pytest.raises(DomainError):
            IdealKind("Weird")

    @given(fermat_reals(), fermat_reals())
    @settings(max_examples=120, deadline=None)
    def test_generators_are_members(self, x, y):
        kind = classify_generated([x, y])
        assert ideal_member(x, kind)
        assert ideal_member(y, kind)


class TestQuotient:
    def test_std_morphism_is_a_ring_map(self):
        x = 2 + dt(2)
        y = 3 + dt(3)
        assert std_morphism(x * y).value == 6
        assert std_morphism(x + y).value == 5

    def test_kernel_is_maximal_ideal(self):
        assert ideal_member(dt(2) + dt(1), D_INF)
        assert not ideal_member(1 + dt(2), D_INF)

    @given(fermat_reals())
    @settings(max_examples=80, deadline=None)
    def test_absorption(self, x):
        h = dt(2) + 3 * dt(F(3, 2))
        assert (h * x).is_infinitesimal()


class TestRepr:
    def test_tags(self):
        assert repr(Da(2)) == "D_2"
        assert repr(Ia(F(3, 2))) == "I_3/2"
        assert repr(D_INF) == "D_inf"
        assert repr(UNIT_IDEAL) == "unit"
        assert repr(ZERO_IDEAL) == "zero"
