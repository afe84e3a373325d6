"""Binomial coefficients, Eulerian numbers and their differences.

Everything here is exact integer arithmetic.  Eulerian rows are memoized and
returned as tuples, so callers cannot mutate the cache.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

BRUTE_FORCE_LIMIT = 12


class ResourceLimitError(ValueError):
    """Raised when a brute-force routine is asked for an infeasible size."""


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero unless ``0 <= b <= a``."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def eulerian_row(i: int) -> tuple[int, ...]:
    """Return ``(A(i, 0), ..., A(i, i-1))`` from the alternating-sum formula."""
    if i < 1:
        raise ValueError(f"Eulerian numbers need i >= 1, got {i}")
    row = []
    for j in range(i):
        total = 0
        for k in range(j + 2):
            term = binom(i + 1, k) * (j + 1 - k) ** i
            total += -term if k % 2 else term
        row.append(total)
    return tuple(row)


def eulerian(i: int, j: int) -> int:
    """Number of permutations of ``i`` letters with exactly ``j`` ascents."""
    row = eulerian_row(i)
    if j < 0 or j >= i:
        return 0
    return row[j]


def eulerian_brute_row(i: int) -> tuple[int, ...]:
    """Ascent counts ``A(i, 0..i-1)`` by enumerating all permutations (independent oracle)."""
    if i < 1:
        raise ValueError(f"Eulerian numbers need i >= 1, got {i}")
    if i > BRUTE_FORCE_LIMIT:
        raise ResourceLimitError(f"refusing to enumerate {i}! permutations (limit {BRUTE_FORCE_LIMIT})")
    counts = [0] * i
    for perm in permutations(range(i)):
        counts[sum(a < b for a, b in zip(perm, perm[1:]))] += 1
    return tuple(counts)


def eulerian_brute(i: int, j: int) -> int:
    row = eulerian_brute_row(i)
    return row[j] if 0 <= j < i else 0


def eulerian_diff(n: int, k: int) -> int:
    """``A(n, k) - A(n, k - 1)``."""
    return eulerian(n, k) - eulerian(n, k - 1)


def peak_second_difference(m: int) -> int:
    """``A(2m-1, m-1) - 2 A(2m-1, m-2) + A(2m-1, m-3)``.

    Negative values are what the asymptotic WLP-failure argument needs; the
    value is positive for m = 3, 4.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    n = 2 * m - 1
    return eulerian(n, m - 1) - 2 * eulerian(n, m - 2) + eulerian(n, m - 3)


def leading_coeff_sum(m: int) -> int:
    """Sum over k <= m of ``(-1)^k C(2m+2, k) [2m(m+1) - k(2m+1)]^(2m-1)``.

    Up to the factor ``(2m-1)!`` this is the leading coefficient of the
    polynomial ``p_poly(m, q, .)``, independently of ``q``.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    total = 0
    for k in range(m + 1):
        term = binom(2 * m + 2, k) * (2 * m * (m + 1) - k * (2 * m + 1)) ** (2 * m - 1)
        total += -term if k % 2 else term
    return total


@dataclass(frozen=True)
class EulerianTable:
    """Immutable block of Eulerian rows ``1..i_max``."""

    rows: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def build(cls, i_max: int) -> "EulerianTable":
        return cls({i: eulerian_row(i) for i in range(1, i_max + 1)})

    def check(self) -> list[str]:
        """Return violated row invariants (length, positivity, sum, symmetry)."""
        problems = []
        for i, row in self.rows.items():
            if len(row) != i:
                problems.append(f"row {i}: length {len(row)}")
            if any(v <= 0 for v in row):
                problems.append(f"row {i}: nonpositive entry")
            if sum(row) != math.factorial(i):
                problems.append(f"row {i}: sum {sum(row)} != {i}!")
            if row != row[::-1]:
                problems.append(f"row {i}: not symmetric")
        return problems


@dataclass(frozen=True)
class DiffPattern:
    n: int
    diffs: tuple[int, ...]  # D(n, k) for k = 0 .. floor((n-1)/2)
    pattern: str  # "increasing", "final-drop" or "other"
    expected: str
    ok: bool


def _strictly_increasing(seq) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def classify_differences(n: int) -> DiffPattern:
    top = (n - 1) // 2
    diffs = tuple(eulerian_diff(n, k) for k in range(top + 1))
    if _strictly_increasing(diffs):
        pattern = "increasing"
    elif (
        len(diffs) >= 3
        and _strictly_increasing(diffs[1:-1])
        and diffs[-2] > diffs[-1] > 0
    ):
        pattern = "final-drop"
    else:
        pattern = "other"
    expected = "increasing" if n % 2 == 0 or n in (3, 5, 7) else "final-drop"
    return DiffPattern(n, diffs, pattern, expected, pattern == expected)


@dataclass(frozen=True)
class ConjectureScan:
    n_max: int
    rows: tuple[DiffPattern, ...]

    @property
    def violations(self) -> tuple[DiffPattern, ...]:
        return tuple(r for r in self.rows if not r.ok)


def scan_conjecture_71(n_max: int) -> ConjectureScan:
    """Classify ``k -> D(n, k)`` on ``[0, floor((n-1)/2)]`` for ``3 <= n <= n_max``.

    Even n and n in {3, 5, 7} are expected to increase strictly; odd n >= 9
    should increase on ``[1, m-2]`` and then drop once while staying positive.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    return ConjectureScan(n_max, tuple(classify_differences(n) for n in range(3, n_max + 1)))
