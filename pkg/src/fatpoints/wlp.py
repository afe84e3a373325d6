"""Detecting failure of the weak Lefschetz property for ``R/(x_0^d, ..., x_n^d, L^d)``.

For even ``n = 2m`` multiplication by a general linear form from degree r-1 to
degree r is examined, where r is the top degree of ``A/lA``.  The map cannot be
injective when ``Δh_A(r) <= 0``, and ``Δh_A(r)`` is the polynomial ``P_{m,q}(t)``
in the quotient ``t`` of ``d - 1 = t(2m+1) + q``.  Verdicts are one-sided: this
module reports ``Fails`` or ``Unknown`` and never certifies that WLP holds.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial

from .closed_forms import r_degree
from .combinatorics import binom
from .hilbert import ci_value


def _check_mqt(m: int, q: int, t: int):
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if not 0 <= q <= 2 * m:
        raise ValueError(f"q must lie in [0, {2 * m}], got {q}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")


def p_poly(m: int, q: int, t: int) -> int:
    """``P_{m,q}(t)`` by its defining alternating sum."""
    _check_mqt(m, q, t)
    base = m - 1 + (m * q) // (2 * m + 1)
    return sum(
        (-1) ** k
        * binom(2 * m + 2, k)
        * binom(base + (q + 1) * (m - k) + t * (2 * m * (m + 1) - k * (2 * m + 1)), 2 * m - 1)
        for k in range(m + 1)
    )


def decompose(m: int, d: int) -> tuple[int, int]:
    """``(t, q)`` with ``d - 1 = t(2m+1) + q`` and ``0 <= q <= 2m``."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return divmod(d - 1, 2 * m + 1)


def witness_degree(m: int, q: int, t: int) -> int:
    """``r = 2m(m+1)t + mq + floor(mq/(2m+1))``."""
    return 2 * m * (m + 1) * t + m * q + (m * q) // (2 * m + 1)


def _second_difference_ci(num_vars: int, d: int, j: int) -> int:
    h = [ci_value(num_vars, [d] * num_vars, x) if x >= 0 else 0 for x in (j - 2, j - 1, j)]
    return h[2] - 2 * h[1] + h[0]


def p_poly_via_hilbert(m: int, q: int, t: int) -> int:
    """``Δ²h_B(r)`` for ``B = K[y_0..y_{2m+1}]/(y_i^d)``; equals ``P_{m,q}(t)``."""
    _check_mqt(m, q, t)
    d = t * (2 * m + 1) + q + 1
    return _second_difference_ci(2 * m + 2, d, witness_degree(m, q, t))


def check_r_degree_identity(m: int, d: int) -> bool:
    """The floor formula for the top degree of ``A/lA`` agrees with the t/q decomposition."""
    t, q = decompose(m, d)
    return r_degree(2 * m - 1, d) == witness_degree(m, q, t)


def theorem63_value(m: int) -> tuple[int, int]:
    """``Δ²h_B(m)`` for ``d = 2`` two ways: closed form and direct binomials."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    closed = Fraction(factorial(2 * m + 2), factorial(m) * factorial(m + 4)) * (12 - 2 * m)
    if closed.denominator != 1:
        raise ArithmeticError(f"closed form not integral at m={m}: {closed}")
    direct = binom(2 * m + 2, m) - 2 * binom(2 * m + 2, m - 1) + binom(2 * m + 2, m - 2)
    return int(closed), direct


class Verdict(str, enum.Enum):
    FAILS = "Fails"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class WlpVerdict:
    n: int
    d: int
    m: int
    q: int
    t: int
    witness: int
    applicable: bool
    verdict: Verdict
    clause: str

    def row(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict.value
        return out


CSV_COLUMNS = ("n", "d", "m", "q", "t", "witness", "applicable", "verdict", "clause")


def applicable(n: int, d: int) -> bool:
    """Whether ``[A/lA]_r`` is known to be nonzero, so the test degree is meaningful."""
    return (d - 1) % (n + 1) == 0 or d >= n * n - n + 2


def wlp_failure_witness(n: int, d: int) -> WlpVerdict:
    if n % 2 or n < 8:
        raise ValueError(f"n must be even and >= 8, got {n}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    m = n // 2
    t, q = decompose(m, d)
    w = p_poly(m, q, t)
    app = applicable(n, d)
    if not app:
        clause = "outside known regularity range"
    elif w > 0:
        clause = "positive witness"
    elif q == 0:
        clause = "n+1 divides d-1"
    else:
        clause = "d >= n^2-n+2"
    verdict = Verdict.FAILS if app and w <= 0 else Verdict.UNKNOWN
    return WlpVerdict(n, d, m, q, t, w, app, verdict, clause)


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[WlpVerdict, ...]
    thresholds: dict[int, int | None]

    def csv_rows(self) -> list[dict]:
        return [r.row() for r in self.rows]


def _threshold(rows: list[WlpVerdict]) -> int | None:
    """Least applicable d from which every applicable d in the scan fails."""
    app = [r for r in rows if r.applicable]
    d0 = None
    for r in reversed(app):
        if r.verdict is not Verdict.FAILS:
            break
        d0 = r.d
    return d0


def scan_failure(n_range, d_range) -> ScanReport:
    rows: list[WlpVerdict] = []
    thresholds: dict[int, int | None] = {}
    for n in n_range:
        if n % 2:
            raise ValueError(f"scan covers even n only, got {n}")
        cell = [wlp_failure_witness(n, d) for d in d_range]
        rows.extend(cell)
        thresholds[n] = _threshold(cell)
    return ScanReport(tuple(rows), thresholds)


def literature_verdict(n: int, d: int) -> tuple[bool, str]:
    """Known WLP status of ``R/(x_0^d..x_n^d, L^d)``, with its provenance.

    Returns ``(has_wlp, note)``.  For even n >= 8 and d >= 3 the answer is the
    conjectured one and the note says so.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n <= 2:
        return True, "known for all d"
    if n == 3:
        return d in (1, 2), "known"
    if n == 4:
        return d in (1, 2, 3), "known"
    if n % 2:
        return d == 1, "known"
    if n == 6:
        return d in (1, 2), "known"
    if d <= 2:
        return d == 1, "known"
    return False, "conjectured"
