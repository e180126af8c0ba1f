"""Tests for the exact combinatorial primitives."""

from itertools import permutations, product
from math import factorial

import pytest

from fanolg import binomial, convolution_identity_sides, multinomial


def naive_lhs(dbar, e, l):
    """The convolution identity's left side as a literal nested sum, used as an
    independent check on the grouped evaluation inside the library."""
    total = 0
    for ivec in product(*[range(d + 1) for d in dbar]):
        term = binomial(e, sum(ivec) + l)
        for d, i in zip(dbar, ivec):
            term *= binomial(d, i)
        total += term
    return total


class TestBinomial:
    def test_basic_values(self):
        assert binomial(5, 3) == 10
        assert binomial(2, 3) == 0
        # direct factorial evaluation of C(7, 4)
        assert binomial(7, 4) == factorial(7) // (factorial(4) * factorial(3)) == 35

    def test_vanishing_convention(self):
        assert binomial(4, -1) == 0
        assert binomial(0, 0) == 1
        assert binomial(10, 11) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_pascal_recurrence_and_symmetry(self):
        for n in range(1, 61):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
                assert binomial(n, k) == binomial(n, n - k)

    def test_exactness_beyond_64_bits(self):
        assert binomial(120, 60) == factorial(120) // factorial(60) ** 2


class TestMultinomial:
    def test_basic_values(self):
        assert multinomial(3, [1, 1]) == 6
        assert multinomial(4, [4]) == 1
        assert multinomial(6, [2, 2, 2]) == factorial(6) // factorial(2) ** 3 == 90

    def test_implicit_final_part(self):
        # 5! / (2! * 1! * 2!) with the leftover 2 implicit
        assert multinomial(5, [2, 1]) == factorial(5) // (2 * 1 * 2)

    def test_permutation_invariance(self):
        parts = [1, 2, 3]
        values = {multinomial(9, p) for p in permutations(parts)}
        assert len(values) == 1

    def test_overfull_parts_rejected(self):
        with pytest.raises(ValueError):
            multinomial(3, [2, 2])

    def test_negative_part_rejected(self):
        with pytest.raises(ValueError):
            multinomial(3, [-1, 2])

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            multinomial(-2, [])


class TestConvolutionIdentity:
    def test_single_exponent_example(self):
        # C(2,0)C(3,1) + C(2,1)C(3,2) + C(2,2)C(3,3) = 3 + 6 + 1 = 10 = C(5,3)
        assert convolution_identity_sides([2], 3, 1) == (10, 10)

    def test_degenerate_example(self):
        assert convolution_identity_sides([1], 0, 0) == (1, 1)

    def test_two_exponent_example(self):
        lhs, rhs = convolution_identity_sides([2, 3], 4, 2)
        assert lhs == rhs
        assert lhs == naive_lhs([2, 3], 4, 2)

    def test_grouped_sum_matches_naive_sum(self):
        for dbar in [(1,), (4,), (2, 2), (3, 1), (2, 3, 4)]:
            for e in range(7):
                for l in range(4):
                    lhs, _ = convolution_identity_sides(dbar, e, l)
                    assert lhs == naive_lhs(dbar, e, l)

    def test_small_exhaustive_sweep(self):
        for k in (1, 2):
            for dbar in product(range(1, 5), repeat=k):
                for e in range(7):
                    for l in range(4):
                        lhs, rhs = convolution_identity_sides(dbar, e, l)
                        assert lhs == rhs, (dbar, e, l)

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValueError):
            convolution_identity_sides([0], 1, 1)
        with pytest.raises(ValueError):
            convolution_identity_sides([2], -1, 0)
        with pytest.raises(ValueError):
            convolution_identity_sides([2], 0, -1)
