"""Hilbert functions of monomial complete intersections and difference tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .combinatorics import binom


@dataclass(frozen=True)
class HilbertTable:
    """Integer-valued function on degrees ``0 .. len(values) - 1``.

    Degrees below 0 read as 0.  When ``complete`` is true the function is known
    to vanish beyond the window as well, so difference operators may extend it.
    """

    values: tuple[int, ...]
    num_vars: int | None = None
    exponents: tuple[int, ...] = ()
    complete: bool = True
    diff_order: int = 0

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.values):
            return self.values[j]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def in_window(self, j: int) -> bool:
        return 0 <= j < len(self.values)

    @property
    def j_max(self) -> int:
        return len(self.values) - 1

    def nonzero(self) -> dict[int, int]:
        return {j: v for j, v in enumerate(self.values) if v}


def ci_regularity(num_vars: int, exponents) -> int:
    """Top nonzero degree ``sum(a_i - 1)`` of ``K[y_1..y_v]/(y_i^{a_i})``."""
    exponents = _check_ci(num_vars, exponents)
    return sum(a - 1 for a in exponents)


def _check_ci(num_vars: int, exponents) -> tuple[int, ...]:
    exponents = tuple(int(a) for a in exponents)
    if num_vars < 1:
        raise ValueError(f"need at least one variable, got {num_vars}")
    if len(exponents) > num_vars:
        raise ValueError(f"{len(exponents)} exponents exceed {num_vars} variables: not a complete intersection")
    if any(a < 1 for a in exponents):
        raise ValueError(f"exponents must be positive: {exponents}")
    return exponents


def ci_value(num_vars: int, exponents, j: int) -> int:
    """Koszul inclusion-exclusion for one degree."""
    exponents = tuple(exponents)
    v = num_vars
    if len(set(exponents)) <= 1:
        s = len(exponents)
        a = exponents[0] if exponents else 0
        return sum((-1) ** k * binom(s, k) * binom(v - 1 + j - k * a, v - 1) for k in range(s + 1))
    total = 0
    for size in range(len(exponents) + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(exponents, size):
            total += sign * binom(v - 1 + j - sum(subset), v - 1)
    return total


def ci_hilbert(num_vars: int, exponents, j_max: int | None = None) -> HilbertTable:
    """Hilbert function of ``K[y_1..y_v]/(y_1^{a_1}, ..., y_s^{a_s})``.

    For ``s == v`` the default window ends one past the regularity, so the last
    entry is a guaranteed zero.  With ``s < v`` the function never vanishes and
    the table is marked incomplete.
    """
    exponents = _check_ci(num_vars, exponents)
    artinian = len(exponents) == num_vars
    if j_max is None:
        j_max = sum(a - 1 for a in exponents) + 1
    values = tuple(ci_value(num_vars, exponents, j) for j in range(j_max + 1))
    return HilbertTable(values, num_vars, exponents, complete=artinian)


def diff(table: HilbertTable, order: int = 1) -> HilbertTable:
    """Apply ``(Δh)(j) = h(j) - h(j-1)`` ``order`` times.

    Complete tables grow by one degree per application so no information is
    lost off the right edge.
    """
    if order < 1:
        raise ValueError(f"difference order must be >= 1, got {order}")
    values = list(table.values)
    for _ in range(order):
        if table.complete:
            values.append(0)
        values = [values[j] - (values[j - 1] if j else 0) for j in range(len(values))]
    return HilbertTable(
        tuple(values), table.num_vars, table.exponents, table.complete, table.diff_order + order
    )


@dataclass
class ShapeReport:
    regularity: int
    symmetric: bool
    strictly_increasing: bool
    peaks: tuple[int, ...]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_shape(table: HilbertTable) -> ShapeReport:
    """Symmetry, strict increase up to the middle, and location of the peak(s)."""
    nz = [j for j, v in enumerate(table.values) if v]
    reg = nz[-1] if nz else -1
    h = [table[j] for j in range(reg + 1)]
    report = ShapeReport(reg, True, True, ())
    if h != h[::-1]:
        report.symmetric = False
        report.violations.append(f"not symmetric about {reg}/2")
    half = h[: reg // 2 + 1]
    if any(a >= b for a, b in zip(half, half[1:])):
        report.strictly_increasing = False
        report.violations.append(f"not strictly increasing on [0, {reg // 2}]")
    top = max(h) if h else 0
    report.peaks = tuple(j for j, v in enumerate(h) if v == top)
    expected = (reg // 2,) if reg % 2 == 0 else ((reg - 1) // 2, (reg + 1) // 2)
    if report.peaks != expected:
        report.violations.append(f"peaks at {report.peaks}, expected {expected}")
    return report


@dataclass
class KoszulReport:
    m: int
    d: int
    nonzero: dict[int, int]
    expected: dict[int, int]
    sign_changes: int

    @property
    def ok(self) -> bool:
        return self.nonzero == self.expected and self.sign_changes == 2 * self.m + 2


def koszul_top_difference_check(m: int, d: int) -> KoszulReport:
    """Compare ``Δ^{2m+2} h_B`` with the coefficients of ``(1 - z^d)^{2m+2}``."""
    if m < 1 or d < 1:
        raise ValueError("need m >= 1 and d >= 1")
    v = 2 * m + 2
    top = diff(ci_hilbert(v, [d] * v), v)
    found = top.nonzero()
    expected = {d * i: (-1) ** i * binom(v, i) for i in range(v + 1)}
    signs = [1 if found[j] > 0 else -1 for j in sorted(found)]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return KoszulReport(m, d, found, expected, changes)

