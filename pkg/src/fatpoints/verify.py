"""Cross-validation suites: closed forms and rewrite rules against the rank oracle.

Each suite yields :class:`Check` records; a failed check carries a one-line
reproducer so a mismatch can be re-run in isolation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import closed_forms as cf
from .combinatorics import binom
from .linalg import Field
from .linsys import LinearSystemSpec, base_dimension, reduce
from .oracle import (
    alpha_oracle,
    duality_check,
    general_points,
    linear_system_dim,
    power_ideal_dim,
    random_config,
    regularity_oracle,
)


@dataclass(frozen=True)
class Check:
    suite: str
    case: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        mark = "ok" if self.ok else "MISMATCH"
        return f"{mark:8} {self.suite}: {self.case} expected={self.expected} got={self.got}"


@dataclass(frozen=True)
class SuiteConfig:
    seeds: tuple[int, ...] = (0, 1, 2)
    field: Field = Field()


def duality_suite(cfg: SuiteConfig, n_max: int = 4, a_max: int = 4, j_extra: int = 3):
    """Both sides of the inverse-system duality, all exponent multisets, ``s <= n+3``.

    Degrees run over ``max(a) - 1 <= j < max(a) + j_extra``.
    """
    for seed in cfg.seeds:
        for n in range(1, n_max + 1):
            for s in range(1, n + 4):
                pts = general_points(n, s, seed, cfg.field)
                for a in combinations_with_replacement(range(1, a_max + 1), s):
                    for j in range(max(a) - 1, max(a) + j_extra):
                        r = duality_check(pts, a, j)
                        yield Check("duality", f"n={n} a={a} j={j} seed={seed}", r.power_side, r.point_side)


def n2_classes(ns=(2, 3, 4)):
    for n in ns:
        for t in range(1, n + 1):
            yield cf.spanning_n2(n, t)


def regularity_suite(cfg: SuiteConfig, ns=(2, 3, 4), ds=range(1, 6)):
    for seed in cfg.seeds:
        for cls in n2_classes(ns):
            pts = random_config(cls.n, None, cls, seed, cfg.field)
            for d in ds:
                want = cf.regularity_powers(cls, d).value
                yield Check("regularity", f"{cls} d={d} seed={seed}", want, regularity_oracle(pts, d))


def alpha_suite(cfg: SuiteConfig, ns=(2, 3, 4), ks=range(1, 5)):
    for seed in cfg.seeds:
        for cls in n2_classes(ns):
            pts = random_config(cls.n, None, cls, seed, cfg.field)
            for k in ks:
                want = cf.alpha_symbolic(cls, k).value
                yield Check("alpha", f"{cls} k={k} seed={seed}", want, alpha_oracle(pts, k, want + 2))


def n3_top(pts, d: int, r: int) -> tuple[int, int]:
    """Regularity and top-degree dimension of ``R/(l_1^d, ..., l_{n+3}^d)``."""
    reg = regularity_oracle(pts, d)
    return reg, power_ideal_dim(pts, [d] * pts.s, r)


def n3_suite(cfg: SuiteConfig, cases=((2, 2), (2, 3), (2, 4), (4, 2), (4, 3), (4, 4))):
    for seed in cfg.seeds:
        for n, d in cases:
            cls = cf.lgp_n3(n)
            pts = random_config(n, None, cls, seed, cfg.field)
            r, top = cf.top_socle_dim(n, d)
            reg, dim = n3_top(pts, d, r)
            yield Check("n3", f"{cls} d={d} seed={seed} regularity", r, reg)
            if top.exact:
                yield Check("n3", f"{cls} d={d} seed={seed} top dim", top.value, dim)


VERLINDE_CASES = ((2, 1), (2, 2), (4, 1))


def verlinde_suite(cfg: SuiteConfig, cases=VERLINDE_CASES, tol: float = 1e-6):
    """Trigonometric sum against ``dim [R/(l^{2j+1})]_{(n+1)j}`` for n+3 forms."""
    for seed in cfg.seeds:
        for n, j in cases:
            v = cf.verlinde(n, j)
            pts = general_points(n, n + 3, seed, cfg.field)
            exp, deg = int(2 * j + 1), int((n + 1) * j)
            dim = power_ideal_dim(pts, [exp] * (n + 3), deg)
            yield Check("verlinde", f"n={n} j={j} seed={seed}", True, abs(v.raw - dim) <= tol)
        # odd n with a half-integer index: exponent 2, degree (n+1)/2
        v = cf.verlinde(3, "1/2")
        pts = general_points(3, 6, seed, cfg.field)
        dim = power_ideal_dim(pts, [2] * 6, 2)
        yield Check("verlinde", f"n=3 j=1/2 seed={seed}", True, abs(v.raw - dim) <= tol)


def random_specs(count: int, seed: int, n_max: int = 4, j_max: int = 8, s_max: int = 8):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        j = rng.randint(0, j_max)
        s = rng.randint(0, s_max)
        yield LinearSystemSpec(n, j, tuple(rng.randint(1, max(j, 1)) for _ in range(s)))


def _spec_dim(spec: LinearSystemSpec, seed: int, fld: Field) -> int:
    return linear_system_dim(spec.n, spec.j, list(spec.mults), seed, fld)


def linsys_suite(cfg: SuiteConfig, count: int = 100):
    """Every rewrite step, and every resolved value, against freshly drawn points."""
    for seed in cfg.seeds:
        for spec in random_specs(count, seed):
            trace = reduce(spec)
            for k, st in enumerate(trace.steps):
                a = _spec_dim(st.before, seed + 1000 * k, cfg.field)
                b = _spec_dim(st.after, seed + 1000 * k + 1, cfg.field)
                yield Check("linsys", f"{st} seed={seed}", a, b)
            if trace.resolved:
                yield Check("linsys", f"{spec} resolved seed={seed}", _spec_dim(spec, seed + 7, cfg.field), trace.dimension)


def base_case_suite(cfg: SuiteConfig):
    """Single-point base formula against the oracle."""
    for seed in cfg.seeds[:1]:
        for n in range(1, 5):
            for j in range(0, 6):
                for b in range(1, j + 2):
                    spec = LinearSystemSpec(n, j, (b,))
                    yield Check("base", f"{spec}", _spec_dim(spec, seed, cfg.field), base_dimension(spec))
        yield Check("base", "L_n(j; ) is all forms", binom(2 + 3, 2), base_dimension(LinearSystemSpec(2, 3)))


SUITES = {
    "duality": duality_suite,
    "regularity": regularity_suite,
    "alpha": alpha_suite,
    "n3": n3_suite,
    "verlinde": verlinde_suite,
    "linsys": linsys_suite,
    "base": base_case_suite,
}


def run_suite(name: str, cfg: SuiteConfig):
    """All checks of one suite, or of every suite for ``name == "all"``."""
    if name == "all":
        for fn in SUITES.values():
            yield from fn(cfg)
        return
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    yield from SUITES[name](cfg)
