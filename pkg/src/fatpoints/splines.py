"""Uniform B-splines as exact rational piecewise polynomials.

``B_1`` is the indicator of ``[0, 1]`` and ``B_i(x) = ∫_0^1 B_{i-1}(x - t) dt``.
Each piece is stored in the local coordinate ``u = x - j`` on ``[j, j+1)``,
which keeps coefficients small; the recursion is ``B_i(x) = F(x) - F(x-1)``
for F a piecewise antiderivative of ``B_{i-1}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .combinatorics import ResourceLimitError, eulerian, peak_second_difference

MAX_ORDER = 64


def _poly_eval(coeffs, u):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _poly_integral(coeffs) -> list[Fraction]:
    """Antiderivative vanishing at 0."""
    return [Fraction(0)] + [c / (k + 1) for k, c in enumerate(coeffs)]


def _poly_sub(a, b) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


@dataclass(frozen=True)
class PiecewisePoly:
    """Pieces on ``[j, j+1)`` for ``j = 0 .. len(pieces)-1`` in local coordinates.

    ``smoothness`` is the order up to which classical derivatives exist at
    the interior breakpoints (``i - 2`` for ``B_i``).
    """

    pieces: tuple[tuple[Fraction, ...], ...]
    smoothness: int = field(default=-1)

    @property
    def support(self) -> tuple[int, int]:
        return 0, len(self.pieces)

    @property
    def degree(self) -> int:
        return max(len(p) for p in self.pieces) - 1

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)


def evaluate(p: PiecewisePoly, x) -> Fraction:
    """Exact value; 0 off ``[0, len]``, and the right edge belongs to the last piece."""
    x = Fraction(x)
    lo, hi = p.support
    if x < lo or x > hi:
        return Fraction(0)
    j = min(math.floor(x), hi - 1)
    return _poly_eval(p.pieces[j], x - j)


def derivative(p: PiecewisePoly, k: int = 1) -> PiecewisePoly:
    """k-th classical derivative; refuses orders where a breakpoint jump would be lost."""
    if k < 1:
        raise ValueError(f"derivative order must be >= 1, got {k}")
    if k > p.smoothness:
        raise ValueError(f"order {k} exceeds the classical smoothness {p.smoothness}")
    pieces = [list(c) for c in p.pieces]
    for _ in range(k):
        pieces = [[c * e for e, c in enumerate(q)][1:] or [Fraction(0)] for q in pieces]
    return PiecewisePoly(tuple(tuple(q) for q in pieces), p.smoothness - k)


@lru_cache(maxsize=None)
def bspline(i: int) -> PiecewisePoly:
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    if i > MAX_ORDER:
        raise ResourceLimitError(f"i={i} exceeds MAX_ORDER={MAX_ORDER}")
    if i == 1:
        return PiecewisePoly(((Fraction(1),),), smoothness=-1)
    prev = bspline(i - 1).pieces
    # F is the antiderivative of B_{i-1} with F(0) = 0, stored piecewise.
    F: list[list[Fraction]] = []
    acc = Fraction(0)
    for c in prev:
        integ = _poly_integral(c)
        integ[0] += acc
        F.append(integ)
        acc = _poly_eval(integ, 1)
    total = acc
    pieces = []
    for j in range(i):
        # B_i(x) = F(x) - F(x - 1) on [j, j+1), local u = x - j
        left = F[j] if j < len(F) else [total]
        right = F[j - 1] if j >= 1 else [Fraction(0)]
        pieces.append(tuple(_poly_sub(left, right)))
    return PiecewisePoly(tuple(pieces), smoothness=i - 2)


def truncated_power(i: int, x) -> Fraction:
    """``Σ_k (-1)^k C(i,k) (x-k)_+^{i-1} / (i-1)!``, independent of the recursion."""
    x = Fraction(x)
    if x < 0 or x > i:
        return Fraction(0)
    s = sum((-1) ** k * math.comb(i, k) * (x - k) ** (i - 1) for k in range(i + 1) if x - k > 0)
    if i == 1:
        return Fraction(1)
    return Fraction(s) / math.factorial(i - 1)


@dataclass
class NodeValueReport:
    i: int
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def lemma65_check(i: int) -> NodeValueReport:
    """Compare ``(i-1)! B_i(j)`` with ``A(i-1, j-1)`` for ``j = 0..i``."""
    if not 2 <= i <= 20:
        raise ValueError(f"i must lie in [2, 20], got {i}")
    b = bspline(i)
    f = math.factorial(i - 1)
    lhs = []
    for j in range(i + 1):
        v = f * evaluate(b, j)
        if v.denominator != 1:
            raise ArithmeticError(f"(i-1)! B_{i}({j}) = {v} is not an integer")
        lhs.append(int(v))
    rhs = tuple(eulerian(i - 1, j - 1) for j in range(i + 1))
    return NodeValueReport(i, tuple(lhs), rhs)


def second_diff(m: int) -> Fraction:
    """``B_{2m}(m) - 2 B_{2m}(m-1) + B_{2m}(m-2)`` exactly."""
    if not 2 <= m <= 32:
        raise ResourceLimitError(f"m must lie in [2, 32], got {m}")
    b = bspline(2 * m)
    return evaluate(b, m) - 2 * evaluate(b, m - 1) + evaluate(b, m - 2)


def second_diff_sign(m: int) -> int:
    value = second_diff(m)
    sign = (value > 0) - (value < 0)
    bridge = peak_second_difference(m)
    if sign != (bridge > 0) - (bridge < 0):
        raise AssertionError(f"spline sign {sign} disagrees with Eulerian value {bridge} at m={m}")
    return sign


# Largest observed i * |deviation| over i in [8, 64], k <= 3, x on a grid in
# [-3, 3] is 0.70 and levels off in i (scripts/calibrate_gaussian.py).
GAUSSIAN_C = 1.0


def gaussian_derivative(k: int, x: float) -> float:
    """``d^k/dx^k exp(-x^2/2) / sqrt(2π)`` via probabilists' Hermite polynomials."""
    he_prev, he = 1.0, x
    if k == 0:
        he = 1.0
    else:
        for n in range(1, k):
            he_prev, he = he, x * he - n * he_prev
    return (-1) ** k * he * math.exp(-x * x / 2) / math.sqrt(2 * math.pi)


@dataclass
class GaussianReport:
    i: int
    k: int
    deviations: tuple[float, ...]
    bound: float

    @property
    def max_deviation(self) -> float:
        return max(self.deviations) if self.deviations else 0.0

    @property
    def ok(self) -> bool:
        return self.max_deviation <= self.bound


def scaled_derivative(i: int, k: int, x: float) -> float:
    """``(i/12)^{(k+1)/2} B_i^{(k)}(sqrt(i/12) x + i/2)`` in floating point."""
    s = math.sqrt(i / 12)
    p = derivative(bspline(i), k) if k else bspline(i)
    y = Fraction(s * x + i / 2)
    return (i / 12) ** ((k + 1) / 2) * float(evaluate(p, y))


def gaussian_compare(i: int, k: int, samples, c: float = GAUSSIAN_C) -> GaussianReport:
    if i <= k + 2:
        raise ValueError(f"need i > k + 2, got i={i}, k={k}")
    devs = tuple(abs(scaled_derivative(i, k, float(x)) - gaussian_derivative(k, float(x))) for x in samples)
    return GaussianReport(i, k, devs, c / i)
