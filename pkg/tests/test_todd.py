"""Gamma series, Todd values, Bernoulli polynomials, Faulhaber sums."""

from fractions import Fraction as F

import pytest

from coxsums import (
    GammaSeries,
    TruncatedSeries,
    bernoulli_polynomial,
    catalog,
    faulhaber,
    gamma_invariant,
    gamma_series,
    gamma_series_xn,
    p_factor,
    p_factor_general,
    parameters,
    parse_type,
    todd_closed,
    todd_values,
    x_sequence,
)
from coxsums.errors import ConstraintViolated, UnsupportedDegree


class TestPFactor:
    def test_p1_is_geometric_doubling(self):
        assert p_factor(1, 5).coefficients == tuple(
            F(c) for c in (1, 2, 2, 2, 2, 2)
        )

    def test_p2_frozen(self):
        assert p_factor(2, 5).coefficients == tuple(
            F(c) for c in (1, 2, 2, 4, 6, 12)
        )

    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
    def test_low_coefficients_in_p(self, p):
        series = p_factor(p, 5)
        assert series[0] == 1
        assert series[1] == 2
        assert series[2] == 2
        assert series[3] == F(2 * p * p + 4, 3)
        assert series[4] == F(4 * p * p + 2, 3)
        assert series[5] == F(6 * p**4 + 20 * p * p + 4, 15)

    def test_powers_of_two_give_even_integers(self):
        for k in range(6):
            series = p_factor(2**k, 30)
            for n, c in enumerate(series.coefficients):
                if n == 0:
                    assert c == 1
                else:
                    assert c.denominator == 1 and c % 2 == 0, (k, n, c)

    def test_requires_positive_p(self):
        with pytest.raises(ValueError):
            p_factor(0, 5)


class TestPFactorGeneral:
    def test_single_factor_reductions(self):
        assert p_factor_general([(1, 1)], 1, 8) == p_factor(1, 8)
        assert p_factor_general([(2, F(1, 2))], 1, 8) == p_factor(2, 8)

    def test_exponent_additivity(self):
        split = p_factor_general([(1, F(1, 2)), (1, F(1, 2))], 1, 8)
        assert split == p_factor(1, 8)

    def test_linear_coefficient_is_twice_m1(self):
        series = p_factor_general([(2, F(1, 2)), (3, F(1, 3))], 2, 6)
        assert series[1] == 4

    def test_constraint_violated(self):
        with pytest.raises(ConstraintViolated):
            p_factor_general([(1, 1), (2, 1)], 1, 6)
        with pytest.raises(ConstraintViolated):
            p_factor_general([], 1, 6)


class TestGammaSeries:
    def test_a2_frozen(self):
        g = gamma_series(parameters(parse_type("A2")), 1, 4)
        assert g.series.coefficients == tuple(F(c) for c in (1, 3, 6, 12, 24))

    def test_e8_low_coefficients(self):
        g = gamma_series(parameters(parse_type("E8")), 1, 2)
        assert g.series[1] == 30
        assert g.series[2] == 870

    def test_a1_reduces_to_p_factor(self):
        ps = parameters(parse_type("A1"))
        for p in (1, 2, 3):
            assert gamma_series(ps, p, 8).series == p_factor(p, 8)

    def test_first_two_coefficients_across_catalog(self):
        for t in catalog(12, 30):
            ps = parameters(t)
            for p in (1, 2, 3):
                g = gamma_series(ps, p, 2).series
                assert g[1] == ps.h, t.name
                assert g[2] == ps.gamma - ps.h, t.name

    def test_routes_agree_to_order_12(self):
        for t in catalog(12, 30):
            ps = parameters(t)
            for p in (1, 2, 3):
                assert (
                    gamma_series(ps, p, 12).series == gamma_series_xn(ps, p, 12).series
                ), (t.name, p)

    def test_minimum_order(self):
        with pytest.raises(ValueError):
            gamma_series(parameters(parse_type("A2")), 1, 1)

    def test_gamma_series_validates_head(self):
        with pytest.raises(ValueError):
            GammaSeries(TruncatedSeries([2, 1]), 1)


class TestXSequence:
    def test_e8_frozen(self):
        xs = x_sequence(parameters(parse_type("E8")), 2)
        assert xs == [F(1), F(44), F(1456)]

    def test_against_direct_powers(self):
        for label in ("E8", "F4", "D5", "I2(9)", "C4"):
            ps = parameters(parse_type(label))
            a, b = ps.A, ps.B
            xs = x_sequence(ps, 8)
            for n in range(9):
                direct = sum(a**j * b ** (n - j) for j in range(n + 1))
                assert xs[n] == direct, (label, n)

    def test_against_binomial_closed_form(self):
        from math import comb

        for label in ("E7", "H4", "A3"):
            ps = parameters(parse_type(label))
            s = ps.h - 2 + ps.alpha + ps.beta
            q = (
                ps.h * ps.h
                - ps.gamma
                + (ps.h - 2) * (ps.alpha + ps.beta - 1)
                + ps.alpha * ps.beta
            )
            xs = x_sequence(ps, 7)
            for n in range(8):
                closed = sum(
                    (-1) ** j * comb(n - j, j) * s ** (n - 2 * j) * q**j
                    for j in range(n // 2 + 1)
                )
                assert xs[n] == closed, (label, n)


class TestToddValues:
    def test_a2_frozen(self):
        g = gamma_series(parameters(parse_type("A2")), 1, 3)
        td = todd_values(g, 3)
        assert td.values == (F(1), F(3, 2), F(5, 4), F(3, 4))

    def test_leading_value_is_one(self):
        g = gamma_series(parameters(parse_type("H4")), 2, 6)
        assert todd_values(g, 6).values[0] == 1

    def test_matches_closed_forms_across_catalog(self):
        for t in catalog(12, 30):
            ps = parameters(t)
            for p in (1, 2):
                g = gamma_series(ps, p, 5)
                td = todd_values(g, 5)
                cs = g.series.coefficients[1:]
                for n in range(6):
                    assert td.values[n] == todd_closed(n, cs), (t.name, p, n)

    def test_odd_degree_values_ignore_their_top_coefficient(self):
        base = TruncatedSeries([1, 3, -2, F(5, 7), 4, -1, F(2, 3), 9])
        for n in (3, 5, 7):
            coeffs = list(base.coefficients)
            coeffs[n] += 17
            perturbed = TruncatedSeries(coeffs)
            assert todd_values(base, n).values[n] == todd_values(perturbed, n).values[n]
            if n < base.order:
                assert (
                    todd_values(base, n + 1).values[n + 1]
                    != todd_values(perturbed, n + 1).values[n + 1]
                )

    def test_order_bound(self):
        g = gamma_series(parameters(parse_type("A2")), 1, 3)
        with pytest.raises(ValueError):
            todd_values(g, 4)


class TestToddClosed:
    def test_fourth_at_ones(self):
        assert todd_closed(4, [1, 1, 1, 1]) == F(1, 120)

    def test_fifth_vanishes_without_higher_coefficients(self):
        assert todd_closed(5, [1, 0, 0, 0, 99]) == 0

    def test_second(self):
        assert todd_closed(2, [3, 6]) == F(5, 4)

    def test_degree_and_length_validation(self):
        with pytest.raises(UnsupportedDegree):
            todd_closed(6, [1] * 6)
        with pytest.raises(ValueError):
            todd_closed(3, [1, 2])


class TestBernoulliFaulhaber:
    def test_polynomials_frozen(self):
        assert bernoulli_polynomial(0) == (F(1),)
        assert bernoulli_polynomial(1) == (F(-1, 2), F(1))
        assert bernoulli_polynomial(2) == (F(1, 6), F(-1), F(1))
        assert bernoulli_polynomial(6) == (
            F(1, 42), F(0), F(-1, 2), F(0), F(5, 2), F(-3), F(1),
        )

    def test_faulhaber_examples(self):
        assert faulhaber(1, 4) == 10
        assert faulhaber(2, 3) == 14
        for r in range(0, 8):
            assert faulhaber(0, r) == r

    def test_faulhaber_matches_direct_sums(self):
        for n in range(9):
            for r in range(21):
                direct = sum(i**n for i in range(1, r + 1))
                assert faulhaber(n, r) == direct, (n, r)

    def test_validation(self):
        with pytest.raises(ValueError):
            faulhaber(-1, 3)
        with pytest.raises(ValueError):
            bernoulli_polynomial(-1)


def test_gamma_invariant_alias_consistency():
    # gamma agrees between a dihedral label and its named alias.
    assert gamma_invariant(parse_type("I2(4)")) == gamma_invariant(parse_type("C2"))
    assert gamma_invariant(parse_type("I2(6)")) == gamma_invariant(parse_type("G2"))
    assert gamma_invariant(parse_type("I2(5)")) == 31
    assert gamma_invariant(parse_type("I2(3)")) == 9
