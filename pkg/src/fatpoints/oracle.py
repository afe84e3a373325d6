"""Brute-force graded dimensions by exact rank computations.

Two independent constructions are provided:

* ``power_ideal_dim`` works on the algebra side: the degree-j piece of the
  ideal generated by powers of linear forms, spanned by ``l^a * monomial``.
* ``fat_point_dim`` works on the point side: degree-j forms killed by all
  partial derivatives of order ``m - 1`` at each point of multiplicity ``m``.

Matrices have one row per generator or condition and one column per degree-j
monomial, in a fixed order, so every run is reproducible from its seed.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .closed_forms import ClassTag, ConfigClass
from .combinatorics import binom
from .linalg import Field

SAMPLING_BUDGET = 200
RATIONAL_COORD_RANGE = 20


class SamplingError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given degree, lexicographically descending."""
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(num_vars), degree):
        e = [0] * num_vars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


def _multinomial(e) -> int:
    out = math.factorial(sum(e))
    for x in e:
        out //= math.factorial(x)
    return out


@dataclass(frozen=True)
class PointConfiguration:
    """Points of P^n given by homogeneous coordinates over ``field``.

    The coordinate vector of a point doubles as the coefficient vector of its
    dual linear form.
    """

    n: int
    points: tuple[tuple, ...]
    field: Field = field(default_factory=Field)
    seed: int | None = None
    class_hint: ConfigClass | None = None

    @property
    def s(self) -> int:
        return len(self.points)

    def subset(self, indices) -> "PointConfiguration":
        return PointConfiguration(self.n, tuple(self.points[i] for i in indices), self.field, self.seed, None)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "points": [[str(x) for x in p] for p in self.points],
            "field": str(self.field),
            "seed": self.seed,
            "class": str(self.class_hint) if self.class_hint else None,
        }


def rank_of_points(points, fld: Field) -> int:
    return fld.rank([[fld.reduce(x) for x in p] for p in points])


def min_dependent_size(points, fld: Field) -> int | None:
    """Size of the smallest linearly dependent subset, or None if all are independent."""
    pts = list(points)
    for size in range(2, len(pts) + 1):
        for sub in combinations(pts, size):
            if rank_of_points(sub, fld) < size:
                return size
    return None


def in_general_position(points, n: int, fld: Field) -> bool:
    """Every subset of at most n+1 points is linearly independent."""
    pts = list(points)
    size = min(len(pts), n + 1)
    return all(rank_of_points(sub, fld) == size for sub in combinations(pts, size))


def certify(cfg: PointConfiguration, hint: ConfigClass) -> list[str]:
    """Check that the coordinates really realize ``hint``; returns the problems found."""
    fld = cfg.field
    n = cfg.n
    problems = []
    pts = cfg.points
    for a, b in combinations(pts, 2):
        if rank_of_points([a, b], fld) < 2:
            problems.append("two points coincide")
            break
    span = rank_of_points(pts, fld)
    if hint.tag is ClassTag.HYPERPLANE:
        if span > n:
            problems.append("points span P^n")
        return problems
    if hint.num_points is not None and cfg.s != hint.num_points:
        problems.append(f"expected {hint.num_points} points, got {cfg.s}")
    if span != n + 1:
        problems.append("points do not span P^n")
    if hint.tag is ClassTag.SPANNING_N2:
        size = min_dependent_size(pts, fld)
        if size is None or size - 2 != hint.dep_t:
            problems.append(f"least dependent subset has size {size}, expected {hint.dep_t + 2}")
    elif hint.tag is ClassTag.LGP_N3 and not in_general_position(pts, n, fld):
        problems.append("not in linearly general position")
    return problems


class _Sampler:
    def __init__(self, fld: Field, rng: random.Random):
        self.fld = fld
        self.rng = rng

    def scalar(self):
        if self.fld.is_prime:
            return self.rng.randrange(1, self.fld.prime)
        return self.rng.choice([x for x in range(-RATIONAL_COORD_RANGE, RATIONAL_COORD_RANGE + 1) if x])

    def vector(self, length: int, support: int | None = None):
        support = length if support is None else support
        return tuple(self.scalar() if i < support else 0 for i in range(length))

    def invertible(self, size: int):
        while True:
            m = [self.vector(size) for _ in range(size)]
            if self.fld.rank(m) == size:
                return m


def _apply(matrix, point, fld: Field):
    return tuple(fld.reduce(sum(row[k] * point[k] for k in range(len(point)))) for row in matrix)


def random_config(
    n: int,
    s: int | None,
    class_hint: ConfigClass | str,
    seed: int,
    field: Field | None = None,
    transform: bool = True,
) -> PointConfiguration:
    """Draw points realizing ``class_hint`` and verify the class certificate.

    ``class_hint`` may be "general" for s points in linearly general position.
    Degenerate n+2 configurations put dep_t+2 general points in a coordinate
    P^{dep_t} and complete with coordinate points; ``transform`` then moves
    everything by a random linear change of coordinates.
    """
    fld = field or Field()
    rng = random.Random(seed)
    sampler = _Sampler(fld, rng)
    general = class_hint == "general"
    hint = None if general else class_hint
    if hint is not None:
        if hint.n != n:
            raise ValueError(f"class {hint} does not live in P^{n}")
        expected = hint.num_points
        if s is None:
            s = expected
        if expected is not None and s != expected:
            raise ValueError(f"class {hint} needs {expected} points, got s={s}")
    if s is None or s < 1:
        raise ValueError("need at least one point")
    for _ in range(SAMPLING_BUDGET):
        if hint is not None and hint.tag is ClassTag.SPANNING_N2:
            t = hint.dep_t
            pts = [sampler.vector(n + 1, t + 1) for _ in range(t + 2)]
            pts += [tuple(int(i == c) for i in range(n + 1)) for c in range(t + 1, n + 1)]
        elif hint is not None and hint.tag is ClassTag.HYPERPLANE:
            pts = [sampler.vector(n + 1, n) for _ in range(s)]
        else:
            pts = [sampler.vector(n + 1) for _ in range(s)]
        if transform and hint is not None:
            g = sampler.invertible(n + 1)
            pts = [_apply(g, p, fld) for p in pts]
        pts = tuple(tuple(fld.reduce(x) for x in p) for p in pts)
        cfg = PointConfiguration(n, pts, fld, seed, hint)
        if general:
            if n == 0 or in_general_position(pts, n, fld):
                return cfg
        elif not certify(cfg, hint):
            return cfg
    raise SamplingError(f"no configuration for {class_hint} in P^{n} after {SAMPLING_BUDGET} draws (seed={seed})")


def _check_field_degree(fld: Field, degree: int):
    if fld.is_prime and fld.prime <= degree:
        raise ValueError(f"prime {fld.prime} must exceed the degree {degree}")


def _power_coeffs(coeffs, a: int, fld: Field) -> list[tuple[tuple[int, ...], object]]:
    """Nonzero terms of ``(sum c_i x_i)^a``."""
    out = []
    for e in monomials(len(coeffs), a):
        c = _multinomial(e)
        for ci, ei in zip(coeffs, e):
            if ei:
                c = c * ci**ei
        c = fld.reduce(c)
        if c != 0:
            out.append((e, c))
    return out


def _full_power_rank(forms, exponents, j: int, fld: Field, num_vars: int) -> int:
    cols = {mono: i for i, mono in enumerate(monomials(num_vars, j))}
    rows = []
    zero = fld.reduce(0)
    for coeffs, a in zip(forms, exponents):
        if a > j:
            continue
        terms = _power_coeffs(coeffs, a, fld)
        for mu in monomials(num_vars, j - a):
            row = [zero] * len(cols)
            for e, c in terms:
                row[cols[tuple(x + y for x, y in zip(e, mu))]] = c
            rows.append(row)
    return fld.rank(rows) if rows else 0


def _standard_monomials(bounds, degree: int):
    return [e for e in monomials(len(bounds), degree) if all(x < b for x, b in zip(e, bounds))]


def _basis_indices(forms, exponents, fld: Field, num_vars: int) -> list[int] | None:
    chosen: list[int] = []
    for i in sorted(range(len(forms)), key=lambda i: exponents[i]):
        trial = [forms[k] for k in chosen + [i]]
        if fld.rank([[fld.reduce(x) for x in f] for f in trial]) == len(trial):
            chosen.append(i)
            if len(chosen) == num_vars:
                return chosen
    return None


def _reduced_power_dim(forms, exponents, j: int, fld: Field, num_vars: int, basis) -> int:
    """Dimension after moving ``num_vars`` independent forms to coordinate variables.

    The ideal then contains ``y_i^{a_i}``; the remaining generators are reduced
    inside the monomial complete intersection, whose graded pieces are small.
    """
    m = [[fld.reduce(x) for x in forms[i]] for i in basis]
    minv = fld.inverse(m)
    bounds = [exponents[i] for i in basis]
    cols = {mono: k for k, mono in enumerate(_standard_monomials(bounds, j))}
    if not cols:
        return 0
    zero = fld.reduce(0)
    rows = []
    others = [i for i in range(len(forms)) if i not in basis]
    for i in others:
        a = exponents[i]
        if a > j:
            continue
        c = [fld.reduce(x) for x in forms[i]]
        new = [fld.reduce(sum(c[r] * minv[r][k] for r in range(num_vars))) for k in range(num_vars)]
        terms = _power_coeffs(new, a, fld)
        for mu in _standard_monomials(bounds, j - a):
            row = [zero] * len(cols)
            hit = False
            for e, coef in terms:
                idx = cols.get(tuple(x + y for x, y in zip(e, mu)))
                if idx is not None:
                    row[idx] = coef
                    hit = True
            if hit:
                rows.append(row)
    return len(cols) - (fld.rank(rows) if rows else 0)


def power_ideal_dim(cfg: PointConfiguration, exponents, j: int, method: str = "auto") -> int:
    """``dim_K [R/(l_1^{a_1}, ..., l_s^{a_s})]_j`` for the forms dual to the points.

    ``method`` is "full" (rank of all ``l_i^{a_i} * monomial`` rows in ``R_j``),
    "reduced" (coordinate change onto n+1 independent forms), or "auto".
    """
    exponents = [int(a) for a in exponents]
    if len(exponents) != cfg.s:
        raise ValueError(f"{len(exponents)} exponents for {cfg.s} forms")
    if any(a < 1 for a in exponents):
        raise ValueError(f"exponents must be positive: {exponents}")
    if j < 0:
        return 0
    fld = cfg.field
    _check_field_degree(fld, j)
    num_vars = cfg.n + 1
    total = binom(cfg.n + j, cfg.n)
    if j < min(exponents):
        return total
    if method not in ("auto", "full", "reduced"):
        raise ValueError(f"unknown method {method!r}")
    basis = None if method == "full" else _basis_indices(cfg.points, exponents, fld, num_vars)
    if basis is None:
        if method == "reduced":
            raise ValueError("forms do not span: reduced method unavailable")
        return total - _full_power_rank(cfg.points, exponents, j, fld, num_vars)
    return _reduced_power_dim(cfg.points, exponents, j, fld, num_vars, basis)


def _derivative_rows(point, order: int, j: int, cols, fld: Field):
    """Rows of all order-``order`` partial derivatives at ``point`` on degree-j monomials.

    For homogeneous forms of degree j, vanishing of every partial of order m-1
    forces vanishing of all lower ones (Euler's relation, valid when the
    characteristic exceeds j).
    """
    nv = len(point)
    zero = fld.reduce(0)
    powers = [[fld.reduce(point[i] ** k) for k in range(j + 1)] for i in range(nv)]
    rows = []
    for beta in monomials(nv, order):
        row = [zero] * len(cols)
        for e, idx in cols.items():
            if any(x < b for x, b in zip(e, beta)):
                continue
            c = 1
            for i in range(nv):
                if beta[i]:
                    c *= math.perm(e[i], beta[i])
            c = fld.reduce(c)
            for i in range(nv):
                c = c * powers[i][e[i] - beta[i]]
                if fld.is_prime:
                    c %= fld.prime
            row[idx] = c
        rows.append(row)
    return rows


def fat_point_dim(cfg: PointConfiguration, orders, j: int) -> int:
    """``dim_K [I_{P_1}^{m_1} ∩ ... ∩ I_{P_s}^{m_s}]_j`` by derivative conditions."""
    orders = [int(m) for m in orders]
    if len(orders) != cfg.s:
        raise ValueError(f"{len(orders)} multiplicities for {cfg.s} points")
    if j < 0:
        return 0
    fld = cfg.field
    _check_field_degree(fld, j)
    if any(m > j for m in orders):
        return 0
    num_vars = cfg.n + 1
    cols = {mono: i for i, mono in enumerate(monomials(num_vars, j))}
    rows = []
    for pt, m in zip(cfg.points, orders):
        if m > 0:
            rows.extend(_derivative_rows(pt, m - 1, j, cols, fld))
    return len(cols) - (fld.rank(rows) if rows else 0)


def symbolic_power_dim(cfg: PointConfiguration, k: int, j: int) -> int:
    """``dim_K [I_Z^{(k)}]_j``."""
    if k < 1:
        raise ValueError(f"symbolic power must be >= 1, got {k}")
    return fat_point_dim(cfg, [k] * cfg.s, j)


def alpha_oracle(cfg: PointConfiguration, k: int, j_cap: int) -> int | None:
    """Least j <= j_cap with a nonzero form in ``I_Z^{(k)}``; None when the cap is hit."""
    for j in range(j_cap + 1):
        if symbolic_power_dim(cfg, k, j) > 0:
            return j
    return None


def hilbert_function_oracle(cfg: PointConfiguration, exponents, j_max: int) -> list[int]:
    return [power_ideal_dim(cfg, exponents, j) for j in range(j_max + 1)]


def regularity_oracle(cfg: PointConfiguration, d: int) -> int:
    """Largest j with ``[R/(l_1^d, ..., l_s^d)]_j != 0``.

    The quotient is standard graded, so the scan stops at the first vanishing
    degree; ``(n+1)(d-1)+1`` always vanishes once the forms span.
    """
    if d < 1:
        raise ValueError(f"exponent must be >= 1, got {d}")
    if rank_of_points(cfg.points, cfg.field) != cfg.n + 1:
        raise ValueError("forms do not span: the quotient is not artinian")
    bound = (cfg.n + 1) * (d - 1) + 1
    exps = [d] * cfg.s
    for j in range(d, bound + 1):
        if power_ideal_dim(cfg, exps, j) == 0:
            return j - 1
    raise AssertionError(f"degree {bound} should vanish for spanning forms")


@dataclass(frozen=True)
class DualityReport:
    exponents: tuple[int, ...]
    j: int
    power_side: int
    point_side: int

    @property
    def ok(self) -> bool:
        return self.power_side == self.point_side


def duality_check(cfg: PointConfiguration, exponents, j: int, method: str = "auto") -> DualityReport:
    """Compare both sides of the inverse-system duality in degree j."""
    exponents = tuple(int(a) for a in exponents)
    if j < max(exponents) - 1:
        raise ValueError(f"duality needs j >= max(a_i) - 1 = {max(exponents) - 1}, got j={j}")
    orders = [j - a + 1 if a <= j else 0 for a in exponents]
    return DualityReport(
        exponents, j, power_ideal_dim(cfg, exponents, j, method=method), fat_point_dim(cfg, orders, j)
    )


def general_points(n: int, s: int, seed: int, field: Field | None = None) -> PointConfiguration:
    if n == 0:
        fld = field or Field()
        return PointConfiguration(0, tuple((fld.reduce(1),) for _ in range(s)), fld, seed, None)
    return random_config(n, s, "general", seed, field)


def linear_system_dim(n: int, j: int, mults, seed: int, field: Field | None = None) -> int:
    """Dimension of ``L_n(j; b_1, ..., b_s)`` for randomly drawn points in general position."""
    mults = [b for b in mults if b > 0]
    if not mults:
        return binom(n + j, n)
    cfg = general_points(n, len(mults), seed, field)
    return fat_point_dim(cfg, mults, j)


@dataclass
class Consensus:
    """Values of one quantity over several seeds; disagreement is flagged, never averaged."""

    values: dict[int, int] = field(default_factory=dict)

    def add(self, seed: int, value: int):
        self.values[seed] = value

    @property
    def unanimous(self) -> bool:
        return len(set(self.values.values())) <= 1

    @property
    def value(self) -> int:
        if not self.unanimous:
            raise ValueError(f"seeds disagree: {self.values}")
        return next(iter(self.values.values()))

