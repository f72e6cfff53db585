import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.errors import DimensionError, DomainError, VariableIndexError
from algebra.exponents import mul
from algebra.ideal import (
    MonomialIdeal,
    colon_ideal,
    colon_monomial,
    contains,
    gcd_reduce,
    intersect,
    is_primary,
    maximal_ideal,
    minimalize,
    power,
    prime_ideal,
    product,
    sat_cap_previous_power,
    saturate_variable,
    saturation,
    stats,
    unit_ideal,
    zero_ideal,
)
from helpers import exponent_box, ideal_pairs, ideals, path_ideal, stabind_ideal

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


class TestConstruction:
    def test_minimalize_drops_multiples(self):
        assert minimalize(2, [(2, 0), (1, 0)]).gens == ((1, 0),)
        assert minimalize(3, [(1, 1, 0), (0, 1, 1)]).gens == ((1, 1, 0), (0, 1, 1))
        assert minimalize(2, [(8, 0), (7, 1), (6, 2), (8, 1)]).gens == ((8, 0), (7, 1), (6, 2))

    def test_generators_are_sorted_canonically(self):
        assert MonomialIdeal(2, [(0, 1), (1, 0)]) == MonomialIdeal(2, [(1, 0), (0, 1), (1, 1)])
        assert stabind_ideal().gens[0] == (4, 0, 0)

    def test_invalid_input(self):
        with pytest.raises(DomainError):
            MonomialIdeal(0, [])
        with pytest.raises(DimensionError):
            MonomialIdeal(2, [(1, 0, 0)])
        with pytest.raises(DimensionError):
            MonomialIdeal(2, [(1, -1)])

    def test_unit_and_zero(self):
        assert unit_ideal(2).is_unit and unit_ideal(2).gens == ((0, 0),)
        assert zero_ideal(2).is_zero and zero_ideal(2).s == 0
        assert MonomialIdeal(2, [(0, 0), (3, 1)]).is_unit

    def test_prime_ideal_support_checked(self):
        assert prime_ideal(3, (1, 3)).gens == (X, Z)
        with pytest.raises(VariableIndexError):
            prime_ideal(3, (4,))
        with pytest.raises(DomainError):
            prime_ideal(3, ())


class TestMembershipAndPowers:
    def test_contains(self):
        I2 = power(stabind_ideal(), 2)
        assert contains(I2, (7, 1, 0))
        assert not contains(I2, (7, 0, 0))
        assert contains(unit_ideal(3), (0, 0, 0))
        with pytest.raises(DimensionError):
            contains(I2, (1, 1))

    def test_square_and_cube_of_stabind_example(self):
        I = stabind_ideal()
        assert power(I, 2).gens == tuple((8 - b, b, 0) for b in range(9))
        assert power(I, 3).gens == tuple((12 - b, b, 0) for b in range(13))
        assert power(I, 1) == I
        assert power(I, 0) == unit_ideal(3)

    def test_negative_power(self):
        with pytest.raises(DomainError):
            power(path_ideal(), -1)

    @pytest.mark.property_based
    @given(ideals(max_s=3), st.integers(0, 3), st.integers(0, 3))
    @settings(max_examples=60, deadline=None)
    def test_power_is_additive(self, I, a, b):
        assert product(power(I, a), power(I, b)) == power(I, a + b)

    @pytest.mark.property_based
    @given(ideals(max_s=3), st.integers(1, 4))
    @settings(max_examples=60, deadline=None)
    def test_binary_power_matches_naive_expansion(self, I, n):
        assert power(I, n) == power(I, n, naive=True)


class TestIntersectionAndColon:
    def test_intersect_examples(self):
        assert intersect(MonomialIdeal(3, [Y]), MonomialIdeal(3, [X, Z])) == path_ideal()
        I = stabind_ideal()
        assert intersect(I, unit_ideal(3)) == I
        assert intersect(I, I) == I

    def test_colon_monomial_examples(self):
        assert colon_monomial(path_ideal(), Y) == MonomialIdeal(3, [X, Z])
        assert colon_monomial(path_ideal(), (0, 0, 0)) == path_ideal()
        assert colon_monomial(MonomialIdeal(1, [(2,)]), (3,)).is_unit

    def test_colon_ideal_examples(self):
        m = maximal_ideal(2)
        assert colon_ideal(m, m).is_unit
        assert colon_ideal(path_ideal(), unit_ideal(3)) == path_ideal()
        assert colon_ideal(path_ideal(), MonomialIdeal(3, [X, Z])) == MonomialIdeal(3, [Y])
        with pytest.raises(DomainError):
            colon_ideal(path_ideal(), zero_ideal(3))

    @pytest.mark.property_based
    @given(ideal_pairs())
    @settings(max_examples=80, deadline=None)
    def test_intersection_membership(self, pair):
        I, J = pair
        both = intersect(I, J)
        for u in exponent_box(I.r, 4):
            assert contains(both, u) == (contains(I, u) and contains(J, u))

    @pytest.mark.property_based
    @given(ideals(), st.data())
    @settings(max_examples=80, deadline=None)
    def test_colon_membership(self, I, data):
        u = tuple(data.draw(st.lists(st.integers(0, 3), min_size=I.r, max_size=I.r)))
        quotient = colon_monomial(I, u)
        for w in exponent_box(I.r, 3):
            assert contains(quotient, w) == contains(I, mul(w, u))


class TestSaturation:
    def test_saturate_variable(self):
        assert saturate_variable(path_ideal(), 1) == MonomialIdeal(3, [Y])
        assert saturate_variable(MonomialIdeal(2, [(0, 3)]), 1) == MonomialIdeal(2, [(0, 3)])
        assert saturate_variable(MonomialIdeal(1, [(2,)]), 1).is_unit
        with pytest.raises(VariableIndexError):
            saturate_variable(path_ideal(), 4)

    def test_saturation_examples(self):
        assert saturation(path_ideal()) == path_ideal()
        assert saturation(MonomialIdeal(2, [(2, 0), (0, 2)])).is_unit
        assert saturation(unit_ideal(2)).is_unit

    def test_sat_cap_previous_power(self):
        I = stabind_ideal()
        assert sat_cap_previous_power(I, 1) == saturation(I)
        with pytest.raises(DomainError):
            sat_cap_previous_power(I, 0)

    @pytest.mark.property_based
    @given(ideals())
    @settings(max_examples=100, deadline=None)
    def test_saturation_is_idempotent_and_larger(self, I):
        sat = saturation(I)
        assert saturation(sat) == sat
        assert all(contains(sat, g) for g in I.gens)


class TestReductionAndStats:
    def test_gcd_reduce(self):
        reduced, t = gcd_reduce(MonomialIdeal(2, [(2, 1), (1, 2)]))
        assert reduced == maximal_ideal(2) and t == (1, 1)
        reduced, t = gcd_reduce(stabind_ideal())
        assert reduced == stabind_ideal() and t == (0, 0, 0)
        reduced, t = gcd_reduce(MonomialIdeal(2, [(2, 3)]))
        assert reduced.is_unit and t == (2, 3)
        with pytest.raises(DomainError):
            gcd_reduce(zero_ideal(2))

    def test_is_primary(self):
        assert not is_primary(stabind_ideal())
        assert is_primary(power(stabind_ideal(), 2))
        assert is_primary(MonomialIdeal(2, [(2, 0), (0, 3)]))
        with pytest.raises(DomainError):
            is_primary(unit_ideal(2))

    def test_stats(self):
        st_ = stats(stabind_ideal())
        assert (st_.r, st_.s, st_.d, st_.d_red, st_.support) == (3, 5, 5, 5, (1, 2, 3))
        st_ = stats(MonomialIdeal(2, [(2, 1), (1, 2)]))
        assert (st_.d, st_.d_red) == (3, 1)
        st_ = stats(path_ideal())
        assert (st_.s, st_.d, st_.d_red, st_.support) == (2, 2, 1, (1, 2, 3))

    @pytest.mark.property_based
    @given(ideals())
    @settings(max_examples=100, deadline=None)
    def test_d_red_is_degree_of_reduced_ideal(self, I):
        reduced, _ = gcd_reduce(I)
        st_ = stats(I)
        assert st_.d_red == reduced.d
        assert 0 <= st_.d_red <= st_.d
