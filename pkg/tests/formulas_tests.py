# -*- coding: utf-8; -*-

from fractions import Fraction

import pytest

from lclbench import formulas
from lclbench.exc import ParameterError


class TestEfficiencyFactor(object):
    def test_values(self):
        assert formulas.x_factor(5, 2) == pytest.approx(0.5)
        assert formulas.x_factor(5, 3) == 0
        assert formulas.x_factor(5, 0) == pytest.approx(1)
        assert formulas.x_prime(5, 2) == pytest.approx(1)

    def test_d_too_large(self):
        with pytest.raises(ParameterError):
            formulas.x_factor(5, 4)
        with pytest.raises(ParameterError):
            formulas.x_factor(2, 0)

    def test_from_rational(self):
        assert formulas.params_from_rational(1, 2) == (5, 2)
        delta, d = formulas.params_from_rational(2, 3)
        assert (delta, d) == (9, 4)
        assert formulas.x_factor(delta, d) == pytest.approx(2.0 / 3)

    def test_bad_rational(self):
        with pytest.raises(ParameterError):
            formulas.params_from_rational(2, 2)
        with pytest.raises(ParameterError):
            formulas.parse_rational('one half')
        assert formulas.parse_rational('2/4') == (1, 2)

    def test_gap(self):
        assert formulas.gap_params(1, 2, 0.3) == (17, 12, 2)

    def test_density(self):
        assert formulas.density_params(0.39, 0.41, 2) == (1, 2, 5, 2)
        with pytest.raises(ParameterError):
            formulas.density_params(0.6, 0.7, 2)


class TestExponents(object):
    def test_poly(self):
        assert formulas.alpha_poly(0, 2) == pytest.approx(1.0 / 3)
        assert formulas.alpha_poly(1, 3) == pytest.approx(1.0 / 3)
        assert formulas.alpha_poly(Fraction(1, 2), 2) == Fraction(2, 5)

    def test_poly_sequence(self):
        assert formulas.alpha_seq_poly(0, 3) == pytest.approx([1.0 / 7, 2.0 / 7])
        assert formulas.alpha_seq_poly(Fraction(1, 2), 3) == [Fraction(4, 19), Fraction(6, 19)]
        assert formulas.alpha_seq_poly(0, 1) == []

    def test_logstar(self):
        assert formulas.alpha_logstar(0, 2) == pytest.approx(0.5)
        assert formulas.alpha_logstar(1, 3) == 1
        assert formulas.alpha_seq(0, 2, 'logstar') == pytest.approx([0.5])

    def test_unknown_regime(self):
        with pytest.raises(ParameterError):
            formulas.alpha_seq(0, 2, 'linear')

    def test_bad_k(self):
        with pytest.raises(ParameterError):
            formulas.alpha_poly(0, 0)


GRID = [i / 999.0 for i in range(1000)]


class TestExponentShape(object):
    @pytest.mark.parametrize('k', [2, 3, 4, 5])
    def test_increasing_in_x(self, k):
        values = [formulas.alpha_poly(x, k) for x in GRID]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize('k', [3, 4, 5])
    def test_increasing_in_level(self, k):
        for x in GRID[:-1]:
            seq = formulas.alpha_seq_poly(x, k)
            assert all(a < b for a, b in zip(seq, seq[1:]))
        assert formulas.alpha_seq_poly(1, k) == pytest.approx([1.0 / k] * (k - 1))

    @pytest.mark.parametrize('k', [1, 2, 3, 6])
    def test_geometric_identity(self, k):
        for x in GRID:
            total = sum((2 - x) ** j for j in range(k))
            assert formulas.alpha_poly(x, k) * total == pytest.approx(1, abs=1e-12)


class TestIteratedLog(object):
    @pytest.mark.parametrize('n, expected', [
        (1, 0), (2, 1), (4, 2), (5, 3), (10, 3), (16, 3), (17, 4), (65536, 4), (65537, 5),
    ])
    def test_values(self, n, expected):
        assert formulas.iterated_log(n) == expected

    def test_zero(self):
        with pytest.raises(ParameterError):
            formulas.iterated_log(0)


class TestLengthsAndGammas(object):
    def test_lengths(self):
        assert formulas.lengths_from_exponents(10 ** 6, [0.4]) == [251, 3984]
        assert formulas.lengths_from_exponents(200, [1.0 / 3]) == [6, 33]

    def test_lengths_ceil(self):
        assert formulas.lengths_from_exponents(10 ** 5, [1.0 / 3]) == [46, 2174]
        assert formulas.lengths_from_exponents(10 ** 5, [1.0 / 3], rounding='ceil') == [47, 2128]
        for n in (10 ** 4, 10 ** 5, 10 ** 6, 10 ** 7):
            lengths = formulas.lengths_from_exponents(n, [1.0 / 3], rounding='ceil')
            assert lengths[:1] == formulas.poly_gammas(n, [1.0 / 3])
        with pytest.raises(ParameterError):
            formulas.lengths_from_exponents(100, [0.5], rounding='floor')

    def test_lengths_logstar(self):
        assert formulas.lengths_from_exponents(65536, [0.5], regime='logstar') == [2, 32768]

    def test_lengths_errors(self):
        with pytest.raises(ParameterError):
            formulas.lengths_from_exponents(100, [0.5, 0.5])
        with pytest.raises(ParameterError):
            formulas.lengths_from_exponents(100, [0])
        with pytest.raises(ParameterError):
            formulas.lengths_from_exponents(100, [0.5], regime='linear')

    def test_gammas(self):
        assert formulas.poly_gammas(10 ** 4, [0.5]) == [100]
        assert formulas.poly_gammas(10, [0.01]) == [2]
        assert formulas.logstar_gammas(65536, 2) == [2]
        assert formulas.logstar_gammas(65536, 1) == []

    def test_round_half_up(self):
        assert formulas.round_half_up(2.5) == 3
        assert formulas.round_half_up(2.49) == 2


class TestCopyBounds(object):
    def test_even_split(self):
        assert formulas.even_split_copies(100, 1, 0.5) == pytest.approx(10)
        assert formulas.even_split_copies(100, 100, 0.5) == pytest.approx(100)

    def test_weight_tree(self):
        assert formulas.weight_tree_copy_bound(100, 5, 2) == pytest.approx(10)
        assert formulas.copy_ball_bound(100, 5, 2) == pytest.approx(60)

    def test_augmented(self):
        assert formulas.augmented_copy_bound(16, 5, 2) == pytest.approx(11)
