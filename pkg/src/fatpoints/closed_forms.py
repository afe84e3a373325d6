"""Closed formulas for initial degrees, regularity, Waldschmidt constants and friends.

Configurations of points are described only by their combinatorial class
(:class:`ConfigClass`); every formula below depends on nothing else.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binom


class ClassTag(str, enum.Enum):
    HYPERPLANE = "hyperplane"
    SPANNING_N1 = "n1"  # n+1 points spanning P^n
    SPANNING_N2 = "n2"  # n+2 points spanning P^n
    LGP_N3 = "n3"  # n+3 points in linearly general position


@dataclass(frozen=True)
class ConfigClass:
    """Position class of a point set in P^n.

    ``dep_t`` is the least u such that some u+2 of the points are linearly
    dependent; it is only meaningful for n+2 spanning points.
    """

    tag: ClassTag
    n: int
    dep_t: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tag", ClassTag(self.tag))
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        if self.tag is ClassTag.SPANNING_N2:
            if self.dep_t is None or not 1 <= self.dep_t <= self.n:
                raise ValueError(f"n+2 points need 1 <= dep_t <= n, got dep_t={self.dep_t} (n={self.n})")
            if self.n < 2:
                raise ValueError("n+2 points need n >= 2")
        elif self.dep_t is not None:
            raise ValueError(f"dep_t only applies to the n+2 class, not {self.tag.value}")
        if self.tag is ClassTag.LGP_N3 and self.n < 2:
            raise ValueError("n+3 points in linearly general position need n >= 2")

    @property
    def num_points(self) -> int | None:
        return {ClassTag.SPANNING_N1: self.n + 1, ClassTag.SPANNING_N2: self.n + 2, ClassTag.LGP_N3: self.n + 3}.get(
            self.tag
        )

    def __str__(self) -> str:
        if self.tag is ClassTag.SPANNING_N2:
            return f"n2(n={self.n}, dep_t={self.dep_t})"
        return f"{self.tag.value}(n={self.n})"


def hyperplane(n: int) -> ConfigClass:
    return ConfigClass(ClassTag.HYPERPLANE, n)


def spanning_n1(n: int) -> ConfigClass:
    return ConfigClass(ClassTag.SPANNING_N1, n)


def spanning_n2(n: int, dep_t: int) -> ConfigClass:
    return ConfigClass(ClassTag.SPANNING_N2, n, dep_t)


def lgp_n3(n: int) -> ConfigClass:
    return ConfigClass(ClassTag.LGP_N3, n)


class Status(str, enum.Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class ClosedFormResult:
    """A formula value together with what is actually known about it."""

    value: int | Fraction
    status: Status
    source: str

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT

    def to_json(self) -> dict:
        v = self.value
        return {
            "value": v if isinstance(v, int) else str(v),
            "status": self.status.value,
            "source": self.source,
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def odd_n3_power_period(n: int) -> int:
    """``(n^2 + 2n - 1) / 2``: symbolic powers that are multiples of it are settled exactly."""
    return (n * n + 2 * n - 1) // 2


def odd_n3_alpha_threshold(n: int) -> Fraction:
    """Smallest k (as a rational bound) from which the odd n+3 initial degree is exact."""
    return Fraction((n * n + n + 1) * (n * n + 2 * n - 1), 2 * (n + 2))


def odd_n3_exact_alpha(n: int, k: int) -> bool:
    return k % odd_n3_power_period(n) == 0 or k >= odd_n3_alpha_threshold(n)


def odd_n3_exact_degree(n: int, d: int) -> bool:
    return (d - 1) % (n + 2) == 0 or d >= n * n + n + 2


def alpha_symbolic(cfg: ConfigClass, k: int) -> ClosedFormResult:
    """Initial degree of the k-th symbolic power of the ideal of the points."""
    if k < 1:
        raise ValueError(f"symbolic power must be >= 1, got {k}")
    n = cfg.n
    tag = cfg.tag
    if tag is ClassTag.HYPERPLANE:
        return ClosedFormResult(k, Status.EXACT, "points in a hyperplane")
    if tag is ClassTag.SPANNING_N1:
        return ClosedFormResult(_ceil_div((n + 1) * k, n), Status.EXACT, "n+1 spanning points")
    if tag is ClassTag.SPANNING_N2:
        t = cfg.dep_t
        return ClosedFormResult(_ceil_div((2 * n + 2 - t) * k, 2 * n - t), Status.EXACT, "n+2 spanning points")
    if n % 2 == 0:
        return ClosedFormResult(_ceil_div((n + 2) * k, n), Status.EXACT, "n+3 points, n even")
    value = _ceil_div((n + 1) * (n + 3) * k, n * n + 2 * n - 1)
    status = Status.EXACT if odd_n3_exact_alpha(n, k) else Status.LOWER_BOUND
    return ClosedFormResult(value, status, "n+3 points, n odd")


def regularity_powers(cfg: ConfigClass, d: int) -> ClosedFormResult:
    """Regularity of ``R/(l_1^d, ..., l_s^d)`` for the dual linear forms."""
    if d < 1:
        raise ValueError(f"exponent must be >= 1, got {d}")
    n = cfg.n
    tag = cfg.tag
    if tag is ClassTag.HYPERPLANE:
        raise ValueError("points in a hyperplane give a non-artinian quotient")
    if tag is ClassTag.SPANNING_N1:
        return ClosedFormResult((n + 1) * (d - 1), Status.EXACT, "monomial complete intersection")
    if tag is ClassTag.SPANNING_N2:
        t = cfg.dep_t
        return ClosedFormResult((2 * n + 2 - t) * (d - 1) // 2, Status.EXACT, "n+2 spanning points")
    if n % 2 == 0:
        return ClosedFormResult((n + 2) * (d - 1) // 2, Status.EXACT, "n+3 points, n even")
    value = r_degree(n, d)
    status = Status.EXACT if odd_n3_exact_degree(n, d) else Status.UPPER_BOUND
    return ClosedFormResult(value, status, "n+3 points, n odd")


def r_degree(n: int, d: int) -> int:
    """``floor((n+1)(n+3)(d-1) / (2(n+2)))``."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return (n + 1) * (n + 3) * (d - 1) // (2 * (n + 2))


def rho_param(n: int, d: int) -> tuple[int, int]:
    """Return ``(r, rho)`` for odd n, where rho is the remainder left by the floor in r."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"rho is defined for odd n >= 3, got {n}")
    r = r_degree(n, d)
    rho = (n + 1) * (n + 3) * (d - 1) // 2 - (n + 2) * r
    if not 0 <= rho <= n + 1:
        raise AssertionError(f"rho={rho} outside [0, {n + 1}] for n={n}, d={d}")
    return r, rho


def top_socle_dim(n: int, d: int) -> tuple[int, ClosedFormResult]:
    """Degree r and ``dim [R/(l_1^d, ..., l_{n+3}^d)]_r`` for n+3 forms in general position.

    Outside the proven range for odd n only the bound ``C(2n+1, n)`` (the
    largest value ``C(n+rho, n)`` can take) is reported.
    """
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if n % 2 == 0:
        return (n + 2) * (d - 1) // 2, ClosedFormResult(1, Status.EXACT, "n+3 forms, n even")
    r, rho = rho_param(n, d)
    if odd_n3_exact_degree(n, d):
        return r, ClosedFormResult(binom(n + rho, n), Status.EXACT, "n+3 forms, n odd")
    return r, ClosedFormResult(binom(2 * n + 1, n), Status.UPPER_BOUND, "n+3 forms, n odd (bound)")


def waldschmidt(cfg: ConfigClass) -> Fraction:
    """Waldschmidt constant ``lim alpha(I^(k)) / k`` as an exact rational."""
    n = cfg.n
    tag = cfg.tag
    if tag is ClassTag.HYPERPLANE:
        return Fraction(1)
    if tag is ClassTag.SPANNING_N1:
        return Fraction(n + 1, n)
    if tag is ClassTag.SPANNING_N2:
        t = cfg.dep_t
        return Fraction(2 * n + 2 - t, 2 * n - t)
    if n % 2 == 0:
        return Fraction(n + 2, n)
    return Fraction((n + 1) * (n + 3), n * n + 2 * n - 1)


def chudnovsky_check(cfg: ConfigClass) -> bool:
    """``waldschmidt >= (alpha(I) + n - 1) / n``.

    For odd-n n+3 classes the k = 1 value of the formula is the true initial
    degree 2 (a quadric passes through n+3 points once n >= 2), so the lower
    bound branch is used as is.
    """
    alpha = alpha_symbolic(cfg, 1).value
    return waldschmidt(cfg) >= Fraction(alpha + cfg.n - 1, cfg.n)


class Undecided(enum.Enum):
    UNDECIDED = "undecided"

    def __bool__(self):
        raise TypeError("an undecided comparison has no truth value")


UNDECIDED = Undecided.UNDECIDED


def demailly_check(cfg: ConfigClass, k: int) -> bool | Undecided:
    """``waldschmidt >= (alpha(I^(k)) + n - 1) / (n + k - 1)``.

    With only a lower bound on alpha the comparison is decided only when the
    bound already violates it.
    """
    res = alpha_symbolic(cfg, k)
    n = cfg.n
    holds = waldschmidt(cfg) >= Fraction(res.value + n - 1, n + k - 1)
    if res.exact or not holds:
        return holds
    return UNDECIDED


def generator_degree_bound(cfg: ConfigClass) -> int:
    """Largest degree of a minimal generator of the ideal, as cited for these classes."""
    tag = cfg.tag
    if tag is ClassTag.SPANNING_N1:
        return 2
    if tag is ClassTag.SPANNING_N2:
        if cfg.dep_t < 2:
            raise ValueError("three collinear points: outside the containment hypotheses")
        return 2
    if tag is ClassTag.LGP_N3:
        return 3 if cfg.n == 2 else 2
    raise ValueError(f"no generator degree known for class {tag.value}")


def containment_inequality_check(cfg: ConfigClass, k: int) -> bool:
    """``alpha(I^(nk)) >= k e+ + k(n-1)``, sufficient for ``I^(nk) ⊆ m^((n-1)k) I^k``.

    A lower bound on the left side is enough to certify the inequality.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    e_plus = generator_degree_bound(cfg)
    lhs = alpha_symbolic(cfg, cfg.n * k).value
    return lhs >= k * e_plus + k * (cfg.n - 1)


def resurgence(cfg: ConfigClass) -> Fraction:
    """Resurgence (equal to the asymptotic resurgence here): ``2 / waldschmidt``."""
    generator_degree_bound(cfg)
    return 2 / waldschmidt(cfg)


@dataclass(frozen=True)
class VerlindeValue:
    n: int
    j: Fraction
    raw: float
    rounded: int

    @property
    def error(self) -> float:
        return abs(self.raw - self.rounded)


def verlinde(n: int, j) -> VerlindeValue:
    """Trigonometric sum equal to ``dim [R/(l_1^{2j+1}, ..., l_{n+3}^{2j+1})]_{(n+1)j}``.

    ``j`` must be an integer for even n and may be a half-integer for odd n.
    """
    j = Fraction(j)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if (2 * j).denominator != 1:
        raise ValueError(f"j must be a half-integer, got {j}")
    if n % 2 == 0 and j.denominator != 1:
        raise ValueError(f"j must be an integer for even n, got {j}")
    terms = int(2 * j) + 1
    total = 0.0
    for k in range(terms):
        try:
            term = math.sin((2 * k + 1) * math.pi / (2 * terms)) ** (-n - 1)
        except OverflowError as exc:
            raise OverflowError(f"Verlinde sum overflows for n={n}, j={j}") from exc
        total += -term if (n + 1) * k % 2 else term
    raw = total / terms
    if not math.isfinite(raw):
        raise OverflowError(f"Verlinde sum overflows for n={n}, j={j}")
    return VerlindeValue(n, j, raw, round(raw))
