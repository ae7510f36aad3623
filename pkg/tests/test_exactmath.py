"""Unit tests for the exact arithmetic kernel."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bek.exactmath import (
    ONE,
    ZERO,
    Composition,
    binomial,
    composition_parts,
    compositions,
    harmonic,
    harmonic_second,
    harmonic_shifted,
    multinomial,
    pochhammer,
    poly,
    poly_add,
    poly_compose_linear,
    poly_degree,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_sub,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_polys = st.lists(rationals, max_size=6).map(poly)


class TestCombinatorics:
    def test_binomial_frozen_values(self):
        assert binomial(6, 2) == 15
        assert binomial(0, 0) == 1
        assert binomial(10, 10) == 1

    def test_binomial_out_of_range_is_zero(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_binomial_rejects_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(0, 20), st.integers(-2, 22))
    def test_binomial_matches_stdlib(self, n, k):
        expected = math.comb(n, k) if 0 <= k <= n else 0
        assert binomial(n, k) == expected

    def test_multinomial_frozen_value(self):
        assert multinomial(4, (2, 1, 1)) == 12
        assert multinomial(0, (0, 0)) == 1

    def test_multinomial_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            multinomial(4, (2, 1))
        with pytest.raises(ValueError):
            multinomial(4, (5, -1))

    @given(st.integers(0, 10), st.integers(1, 4))
    def test_multinomial_sums_to_power(self, n, k):
        total = sum(multinomial(n, parts) for parts in composition_parts(n, k))
        assert total == k ** n

    def test_pochhammer_frozen_values(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert pochhammer(Fraction(3), 0) == 1
        assert pochhammer(Fraction(1), 5) == 120

    @given(rationals, st.integers(0, 8), st.integers(0, 8))
    def test_pochhammer_splits_multiplicatively(self, z, m, k):
        assert pochhammer(z, m + k) == pochhammer(z, m) * pochhammer(z + m, k)


class TestHarmonics:
    def test_harmonic_values(self):
        assert harmonic(0) == 0
        assert harmonic(4) == Fraction(25, 12)

    def test_harmonic_shifted_values(self):
        assert harmonic_shifted(Fraction(2), 3) == Fraction(13, 12)
        # at a=1 the shifted sum is the plain harmonic number
        for n in range(8):
            assert harmonic_shifted(Fraction(1), n) == harmonic(n)

    def test_harmonic_shifted_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            harmonic_shifted(Fraction(0), 3)

    def test_harmonic_second_values(self):
        assert harmonic_second(3) == Fraction(49, 36)
        assert harmonic_second(1) == 1


class TestPolynomials:
    def test_constructor_trims_and_converts(self):
        assert poly([1, 0, 0]) == (Fraction(1),)
        assert poly([]) == ZERO
        assert poly([0]) == ZERO

    def test_degree(self):
        assert poly_degree(ZERO) == -1
        assert poly_degree(ONE) == 0
        assert poly_degree(poly([1, 2, 3])) == 2

    def test_eval_frozen(self):
        p = poly([Fraction(1, 6), -1, 1])
        assert poly_eval(p, Fraction(1, 2)) == Fraction(-1, 12)

    def test_compose_linear_frozen(self):
        p = poly([Fraction(1, 6), -1, 1])
        assert poly_compose_linear(p, 2) == poly([Fraction(1, 6), -2, 4])

    @given(small_polys, small_polys, rationals)
    def test_add_matches_pointwise(self, p, q, x):
        assert poly_eval(poly_add(p, q), x) == poly_eval(p, x) + poly_eval(q, x)

    @given(small_polys, small_polys, rationals)
    def test_mul_matches_pointwise(self, p, q, x):
        assert poly_eval(poly_mul(p, q), x) == poly_eval(p, x) * poly_eval(q, x)

    @given(small_polys, rationals, rationals)
    def test_shift_is_argument_translation(self, p, u, x):
        assert poly_eval(poly_shift(p, u), x) == poly_eval(p, x + u)

    @given(small_polys, rationals)
    def test_scale_matches_pointwise(self, p, c):
        assert poly_scale(c, p) == poly_mul(poly([c]), p)

    @given(small_polys, small_polys)
    def test_sub_inverts_add(self, p, q):
        assert poly_sub(poly_add(p, q), q) == p

    def test_derivative_power_rule(self):
        assert poly_derivative(poly([5, 0, 0, 2])) == poly([0, 0, 6])
        assert poly_derivative(ONE) == ZERO
        assert poly_derivative(ZERO) == ZERO

    @given(small_polys, small_polys)
    def test_derivative_product_rule(self, p, q):
        lhs = poly_derivative(poly_mul(p, q))
        rhs = poly_add(poly_mul(poly_derivative(p), q), poly_mul(p, poly_derivative(q)))
        assert lhs == rhs


class TestCompositions:
    def test_count_frozen(self):
        assert len(list(compositions(5, 3))) == 21

    def test_lexicographic_and_complete(self):
        parts = list(composition_parts(3, 2))
        assert parts == [(0, 3), (1, 2), (2, 1), (3, 0)]

    def test_zero_sum(self):
        assert list(composition_parts(0, 3)) == [(0, 0, 0)]

    def test_single_slot(self):
        assert list(composition_parts(4, 1)) == [(4,)]

    def test_negative_total_is_vacuous(self):
        assert list(composition_parts(-2, 3)) == []

    def test_rejects_bad_slot_count(self):
        with pytest.raises(ValueError):
            list(composition_parts(3, 0))

    def test_composition_objects(self):
        cs = list(compositions(2, 2))
        assert all(isinstance(c, Composition) for c in cs)
        assert [c.parts for c in cs] == [(0, 2), (1, 1), (2, 0)]
        assert cs[0].n == 2 and cs[0].k == 2

    @given(st.integers(0, 9), st.integers(1, 4))
    def test_count_is_stars_and_bars(self, n, k):
        assert len(list(composition_parts(n, k))) == math.comb(n + k - 1, k - 1)
