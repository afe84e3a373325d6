from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from fatpoints.combinatorics import (
    EulerianTable,
    ResourceLimitError,
    binom,
    classify_differences,
    eulerian,
    eulerian_brute,
    eulerian_diff,
    leading_coeff_sum,
    peak_second_difference,
    scan_conjecture_71,
)


@pytest.mark.parametrize("a,b,want", [(5, 2, 10), (3, 5, 0), (7, 0, 1), (4, -1, 0), (-3, 2, 0)])
def test_binom(a, b, want):
    assert binom(a, b) == want


@pytest.mark.parametrize("i,j,want", [(3, 1, 4), (5, 2, 66), (4, 4, 0), (4, -1, 0), (1, 0, 1)])
def test_eulerian_values(i, j, want):
    assert eulerian(i, j) == want


def test_eulerian_rejects_small_i():
    with pytest.raises(ValueError):
        eulerian(0, 0)


@pytest.mark.parametrize("i,j,want", [(3, 1, 4), (2, 0, 1), (4, 1, 11)])
def test_brute_force(i, j, want):
    assert eulerian_brute(i, j) == want


def test_brute_force_guard():
    with pytest.raises(ResourceLimitError):
        eulerian_brute(13, 2)


def test_formula_matches_enumeration():
    for i in range(1, 9):
        for j in range(i):
            assert eulerian(i, j) == eulerian_brute(i, j)


def test_rows_symmetric_and_sum_to_factorial():
    assert EulerianTable.build(30).check() == []


@pytest.mark.parametrize("n,k,want", [(4, 1, 10), (3, 2, -3), (5, 0, 1)])
def test_eulerian_diff(n, k, want):
    assert eulerian_diff(n, k) == want


@pytest.mark.parametrize("m,want", [(3, 15), (4, 154), (5, -5670)])
def test_peak_second_difference(m, want):
    assert peak_second_difference(m) == want


@given(st.integers(min_value=2, max_value=40))
def test_peak_is_difference_of_differences(m):
    n = 2 * m - 1
    assert peak_second_difference(m) == eulerian_diff(n, m - 1) - eulerian_diff(n, m - 2)


def test_diff_positive_exactly_on_lower_half():
    for n in range(1, 31):
        for k in range(-1, n + 1):
            assert (eulerian_diff(n, k) > 0) == (0 <= k <= (n - 1) // 2), (n, k)


def test_leading_coeff_sum_m2():
    assert leading_coeff_sum(2) == -210


def test_leading_coeff_sum_reverse_order():
    for m in range(2, 12):
        terms = [(-1) ** k * binom(2 * m + 2, k) * (2 * m * (m + 1) - k * (2 * m + 1)) ** (2 * m - 1)
                 for k in range(m + 1)]
        assert leading_coeff_sum(m) == sum(reversed(terms))


def test_leading_coeff_sum_nonzero_scan():
    # the negativity of the whole sequence is only observed, not claimed
    values = [leading_coeff_sum(m) for m in range(2, 51)]
    assert all(v != 0 for v in values)


def test_leading_coeff_m3_is_top_finite_difference():
    # (2m-1)! times the t^{2m-1} coefficient equals the (2m-1)-th finite difference
    from fatpoints.wlp import p_poly

    m = 3
    vals = [p_poly(m, 0, t) for t in range(2 * m)]
    top = sum((-1) ** (2 * m - 1 - k) * math.comb(2 * m - 1, k) * v for k, v in enumerate(vals))
    assert top == leading_coeff_sum(m)


def test_difference_patterns():
    assert classify_differences(4).diffs == (1, 10)
    assert classify_differences(4).pattern == "increasing"
    d9 = classify_differences(9).diffs
    assert d9[3] > d9[4] > 0
    assert classify_differences(3).pattern == "increasing"


def test_scan_requires_n3():
    with pytest.raises(ValueError):
        scan_conjecture_71(2)


def _recurrence_row(n):
    row = [1]
    for i in range(2, n + 1):
        row = [(k + 1) * (row[k] if k < len(row) else 0) + (i - k) * (row[k - 1] if k >= 1 else 0)
               for k in range(i)]
    return row


def test_scan_observed_pattern_up_to_40():
    # even n from 24 on end with a drop instead of increasing to the middle
    scan = scan_conjecture_71(40)
    assert [r.n for r in scan.violations] == list(range(24, 41, 2))
    assert all(r.pattern == "final-drop" for r in scan.violations)
    assert all(r.ok for r in scan.rows if r.n < 24)


def test_first_even_drop_by_recurrence():
    row = _recurrence_row(24)
    assert row == [eulerian(24, k) for k in range(24)]
    d = [row[k] - (row[k - 1] if k else 0) for k in range(12)]
    assert d[10] > d[11] > 0
