"""
Plucker - Closed Form Tests
"""
import math

import pytest
from hypothesis import given, settings

from plucking.formulas import (
    DelayedHedgehog, delays_to_eps, family_1_4k_1, family_1a3k1b, family_delays,
    hedgehog_anti_unimodal, hedgehog_delay12, hedgehog_plain, is_anti_unimodal,
)
from plucking.recursion import plucking, plucking_delay
from polynomial.factor import factor_quantum
from polynomial.qpoly import ONE, ZERO, QPolynomial, q_factorial
from polynomial.shape import is_unimodal
from trees.tree import hedgehog
from utils.errors import NotAntiUnimodalError
from tests.strategies import eps_bits


def P(*coeffs):
    return QPolynomial(coeffs)


def recursion(delays):
    tree, assignment = hedgehog(delays)
    return plucking_delay(tree, assignment)


class TestAntiUnimodal:
    @pytest.mark.parametrize('values, expected', [
        ((3, 2, 1, 2, 3), True),
        ((1, 1, 2), True),
        ((2, 1), True),
        ((), True),
        ((1, 2, 1), False),
        ((2, 1, 2, 1), False),
    ])
    def test_shape(self, values, expected):
        assert is_anti_unimodal(values) is expected

    def test_counts(self):
        h = DelayedHedgehog((3, 2, 1, 1, 2, 3))
        assert h.value_counts() == {3: 2, 2: 2, 1: 2}
        assert h.right_counts() == {2: 1, 3: 1}
        assert h.outer_max == 3
        assert h.leaf_count == 6
        tree, assignment = h.tree()
        assert tree.leaf_count == 6
        assert assignment.values == (3, 2, 1, 1, 2, 3)

    def test_no_one_has_no_right_counts(self):
        assert DelayedHedgehog((2, 3)).right_counts() == {}

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            DelayedHedgehog((1, 0))

    def test_example_32123(self):
        poly = hedgehog_anti_unimodal((3, 2, 1, 2, 3))
        assert poly == P(0, 0, 0, 1, 3, 4, 3, 1)
        factored = factor_quantum(poly)
        assert factored.shift == 3
        assert factored.multiplicities() == {3: 1, 2: 2}

    @pytest.mark.parametrize('delays, expected', [
        ((2, 1), ONE),
        ((1, 2), P(0, 1)),
        ((1, 1, 2), P(0, 1, 2, 1)),
        ((1, 3), ZERO),
        ((2, 2), ZERO),
        ((), ONE),
    ])
    def test_small_cases(self, delays, expected):
        assert hedgehog_anti_unimodal(delays) == expected

    def test_accepts_delayed_hedgehog(self):
        assert hedgehog_anti_unimodal(DelayedHedgehog((2, 1))) == ONE

    def test_not_anti_unimodal(self):
        with pytest.raises(NotAntiUnimodalError):
            hedgehog_anti_unimodal((1, 2, 1))

    @pytest.mark.parametrize('delays', [
        (3, 2, 1, 2, 3), (4, 1, 1, 3), (2, 2, 1, 1, 1, 4), (1, 1, 1, 2, 2), (3, 1, 2, 2),
    ])
    def test_matches_recursion(self, delays):
        assert hedgehog_anti_unimodal(delays) == recursion(delays)


class TestPlainHedgehog:
    @pytest.mark.parametrize('n', range(7))
    def test_q_factorial(self, n):
        tree, _ = hedgehog((1,) * n)
        assert hedgehog_plain(n) == plucking(tree)


class TestDelay12:
    def test_eps_reads_right_to_left(self):
        assert delays_to_eps((2, 1, 1)) == (1, 1, 0)

    def test_rejects_other_values(self):
        with pytest.raises(ValueError):
            delays_to_eps((1, 3))

    def test_examples(self):
        assert hedgehog_delay12(delays_to_eps((2, 1, 2))) == P(0, 1, 1)
        assert hedgehog_delay12(()) == ONE
        assert hedgehog_delay12((0,)) == ZERO
        assert hedgehog_delay12((1,)) == ONE

    @settings(max_examples=60)
    @given(eps_bits(min_size=1, max_size=7))
    def test_matches_recursion(self, bits):
        delays = tuple(1 if b else 2 for b in reversed(bits))
        assert hedgehog_delay12(bits) == recursion(delays)


class TestFamilies:
    def test_1_4k_1_first_member(self):
        assert family_1_4k_1(1) == P(0, 1, 4, 7, 8, 8, 8, 7, 4, 1)
        assert is_unimodal(family_1_4k_1(1))

    @pytest.mark.parametrize('k', range(1, 8))
    def test_1_4k_1_at_one(self, k):
        assert family_1_4k_1(k).evaluate(1) == 24 * math.factorial(k + 1)

    @pytest.mark.parametrize('k', [1, 2])
    def test_1_4k_1_matches_recursion(self, k):
        assert family_1_4k_1(k) == recursion(family_delays('14k1', k=k))

    def test_1a3k1b_examples(self):
        assert family_1a3k1b(1, 1, 1) == P(0, 1, 1)
        assert family_1a3k1b(2, 1, 1) == P(0, 1, 3, 3, 2, 2, 1)

    @pytest.mark.parametrize('a, k, b', [(1, 1, 1), (2, 1, 1), (1, 2, 2), (3, 1, 2), (2, 3, 1)])
    def test_1a3k1b_matches_recursion(self, a, k, b):
        assert family_1a3k1b(a, k, b) == recursion(family_delays('1a3k1b', a=a, k=k, b=b))

    def test_family_delays(self):
        assert family_delays('14k1', k=2) == (1, 1, 4, 4, 1, 1)
        assert family_delays('1a3k1b', a=1, k=2, b=3) == (1, 3, 3, 1, 1, 1)
        with pytest.raises(ValueError):
            family_delays('nope')

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            family_1_4k_1(0)
        with pytest.raises(ValueError):
            family_1a3k1b(0, 1, 1)

    def test_factorial_factor(self):
        assert family_1_4k_1(2).coefficient(2) == 1
        assert q_factorial(3).evaluate(1) * 24 == family_1_4k_1(2).evaluate(1)
