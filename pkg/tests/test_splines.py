from __future__ import annotations

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fatpoints.combinatorics import ResourceLimitError, eulerian, peak_second_difference
from fatpoints.splines import (
    bspline,
    derivative,
    evaluate,
    gaussian_compare,
    lemma65_check,
    second_diff,
    second_diff_sign,
    truncated_power,
)

rationals = st.fractions(min_value=-2, max_value=20, max_denominator=12)


@pytest.mark.parametrize("i,x,want", [(2, 1, 1), (3, 1, F(1, 2)), (4, 2, F(2, 3)), (2, F(1, 2), F(1, 2)),
                                      (4, -1, 0), (6, 3, F(11, 20))])
def test_values(i, x, want):
    assert evaluate(bspline(i), x) == want


def test_indicator_edges():
    b = bspline(1)
    assert evaluate(b, 0) == evaluate(b, 1) == 1
    assert evaluate(b, F(-1, 10**6)) == evaluate(b, F(1000001, 10**6)) == 0


def test_guard():
    with pytest.raises(ResourceLimitError):
        bspline(65)
    with pytest.raises(ValueError):
        bspline(0)


def test_first_derivative_identity():
    # B_i' = B_{i-1}(x) - B_{i-1}(x-1)
    assert evaluate(derivative(bspline(3), 1), 1) == 1
    for i in range(3, 12):
        d = derivative(bspline(i), 1)
        for x in [F(k, 5) for k in range(0, 5 * i + 1)]:
            assert evaluate(d, x) == evaluate(bspline(i - 1), x) - evaluate(bspline(i - 1), x - 1)


def test_second_derivative_at_centre():
    assert evaluate(derivative(bspline(4), 2), 2) == -2
    b2 = bspline(2)
    assert evaluate(b2, 2) - 2 * evaluate(b2, 1) + evaluate(b2, 0) == -2


def test_derivative_guard():
    with pytest.raises(ValueError):
        derivative(bspline(2), 1)
    with pytest.raises(ValueError):
        derivative(bspline(5), 4)


def test_continuity_at_breakpoints():
    for i in range(2, 12):
        p = bspline(i)
        for k in range(0, i - 1):
            q = derivative(p, k) if k else p
            for j in range(1, i):
                left = sum(q.pieces[j - 1])  # value at u = 1 on the left piece
                assert left == q.pieces[j][0], (i, k, j)


@given(st.integers(1, 14), rationals)
def test_matches_truncated_powers(i, x):
    assert evaluate(bspline(i), x) == truncated_power(i, x)


@given(st.integers(1, 14), rationals)
def test_symmetry(i, x):
    assert evaluate(bspline(i), x) == evaluate(bspline(i), i - x)


@given(st.integers(2, 14), st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_partition_of_unity(i, x):
    # integer shifts sum to 1; B_1 is excluded since both edges of [0, 1] count
    assert sum(evaluate(bspline(i), x + j) for j in range(-i - 1, i + 2)) == 1


def test_partition_of_unity_interior():
    for i in range(2, 15):
        for x in [F(k, 7) for k in range(1, 7)]:
            assert sum(evaluate(bspline(i), x + j) for j in range(-i, i + 1)) == 1


def test_integral_and_nonnegativity():
    for i in range(1, 16):
        total = F(0)
        for piece in bspline(i).pieces:
            total += sum(c / (e + 1) for e, c in enumerate(piece))
            assert all(evaluate(bspline(i), F(k, 4)) >= 0 for k in range(-4, 4 * i + 5))
        assert total == 1


def test_node_values_examples():
    assert lemma65_check(4).lhs[1:4] == (1, 4, 1)
    assert lemma65_check(2).lhs[1] == 1 == eulerian(1, 0)
    assert lemma65_check(10).ok


def test_node_values_range():
    with pytest.raises(ValueError):
        lemma65_check(21)
    assert all(lemma65_check(i).ok for i in range(2, 21))


@pytest.mark.parametrize("m,sign", [(3, 1), (4, 1), (5, -1)])
def test_second_diff_sign(m, sign):
    assert second_diff_sign(m) == sign


def test_sign_bridge():
    for m in range(2, 33):
        value = second_diff(m) * math.factorial(2 * m - 1)
        assert value == peak_second_difference(m)


def test_second_diff_guard():
    with pytest.raises(ResourceLimitError):
        second_diff(33)


def test_gaussian_examples():
    assert gaussian_compare(16, 0, [0]).ok
    assert gaussian_compare(24, 2, [0]).ok
    with pytest.raises(ValueError):
        gaussian_compare(4, 3, [0])


@pytest.mark.slow
def test_gaussian_bound_frozen_constant():
    xs = [x / 4 for x in range(-12, 13)]
    for i in range(8, 65, 4):
        for k in range(4):
            if i > k + 2:
                assert gaussian_compare(i, k, xs).ok, (i, k)
