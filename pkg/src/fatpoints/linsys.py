"""Rewriting fat-point linear systems ``L_n(j; b_1, ..., b_s)``.

Each rule replaces a system by another of the same dimension (for points in
general position): Cremona steps, Bezout steps that peel off the hyperplane
through the n heaviest points, and cone steps that project from a point of
multiplicity j.  ``reduce`` chains them until a base case resolves.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binom


class RuleError(ValueError):
    """A rewrite rule was applied outside its precondition."""


@dataclass(frozen=True)
class LinearSystemSpec:
    n: int
    j: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.j < 0:
            raise ValueError(f"need n >= 0 and j >= 0, got n={self.n}, j={self.j}")
        if any(b < 0 for b in self.mults):
            raise ValueError(f"negative multiplicity in {self.mults}")
        object.__setattr__(self, "mults", tuple(sorted((b for b in self.mults if b > 0), reverse=True)))

    @property
    def s(self) -> int:
        return len(self.mults)

    def padded(self, length: int) -> list[int]:
        return list(self.mults) + [0] * max(0, length - self.s)

    def __str__(self) -> str:
        return f"L_{self.n}({self.j}; {','.join(map(str, self.mults))})"

    @classmethod
    def parse(cls, text: str) -> "LinearSystemSpec":
        """Read ``L_n(j; b1,b2,...)``; ``b^e`` repeats a multiplicity."""
        body = text.strip()
        if not body.startswith("L_") or "(" not in body or not body.endswith(")"):
            raise ValueError(f"cannot parse linear system {text!r}")
        n = int(body[2 : body.index("(")])
        inner = body[body.index("(") + 1 : -1]
        j_part, _, b_part = inner.partition(";")
        return cls(n, int(j_part), tuple(parse_mults(b_part)))


def parse_mults(text: str) -> list[int]:
    out: list[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if "^" in tok:
            b, e = tok.split("^")
            out.extend([int(b)] * int(e))
        else:
            out.append(int(tok))
    return out


def cremona_shift(spec: LinearSystemSpec) -> int:
    """``t = (n-1) j - (b_1 + ... + b_{n+1})``."""
    return (spec.n - 1) * spec.j - sum(spec.padded(spec.n + 1)[: spec.n + 1])


def cremona_step(spec: LinearSystemSpec) -> LinearSystemSpec:
    """Quadratic transformation centred at the n+1 heaviest points."""
    n = spec.n
    if n < 2:
        raise RuleError(f"Cremona step needs n >= 2, got {spec}")
    t = cremona_shift(spec)
    b = spec.padded(n + 1)
    for i in range(n + 1):
        if b[i] + t < 0:
            raise RuleError(f"Cremona step on {spec}: b_{i + 1} + t = {b[i]} + ({t}) < 0")
    if spec.j + t < 0:
        raise RuleError(f"Cremona step on {spec}: degree would become {spec.j + t}")
    return LinearSystemSpec(n, spec.j + t, tuple(x + t for x in b[: n + 1]) + tuple(b[n + 1 :]))


def bezout_step(spec: LinearSystemSpec) -> LinearSystemSpec:
    """Remove the hyperplane through the n heaviest points when it is a fixed component."""
    n = spec.n
    if n < 2:
        raise RuleError(f"Bezout step needs n >= 2, got {spec}")
    if spec.j < 1:
        raise RuleError(f"Bezout step needs j >= 1, got {spec}")
    if spec.s < n:
        raise RuleError(f"Bezout step on {spec}: needs {n} points, only {spec.s}")
    top = spec.mults[:n]
    if sum(top) <= (n - 1) * spec.j:
        raise RuleError(f"Bezout step on {spec}: {sum(top)} <= (n-1)j = {(n - 1) * spec.j}")
    return LinearSystemSpec(n, spec.j - 1, tuple(x - 1 for x in top) + spec.mults[n:])


def cone_step(spec: LinearSystemSpec) -> LinearSystemSpec:
    """Project from a point of multiplicity j: every member is a cone over it."""
    if spec.n < 1:
        raise RuleError(f"cone step needs n >= 1, got {spec}")
    if spec.j < 1 or spec.j not in spec.mults:
        raise RuleError(f"cone step on {spec}: no point of multiplicity j = {spec.j}")
    rest = list(spec.mults)
    rest.remove(spec.j)
    return LinearSystemSpec(spec.n - 1, spec.j, tuple(rest))


def base_dimension(spec: LinearSystemSpec) -> int | None:
    """Dimension when it is immediate, else None.

    Covers no points, a single fat point, a multiplicity above the degree,
    degree 0 with a condition, P^0 (where every point is the same point) and
    the projective line, where distinct points impose independent conditions.
    """
    n, j, b = spec.n, spec.j, spec.mults
    if not b:
        return binom(n + j, n)
    if b[0] > j:
        return 0
    if j == 0 or n == 0:
        return 0
    if len(b) == 1:
        return binom(n + j, n) - binom(n + min(b[0] - 1, j), n)
    if n == 1:
        return max(0, j + 1 - sum(b))
    return None


@dataclass(frozen=True)
class Step:
    rule: str
    before: LinearSystemSpec
    after: LinearSystemSpec
    shift: int | None = None

    def __str__(self) -> str:
        tail = f"  [t={self.shift}]" if self.shift is not None else ""
        return f"{self.rule:<8}{self.before} -> {self.after}{tail}"


@dataclass(frozen=True)
class ReductionTrace:
    start: LinearSystemSpec
    steps: tuple[Step, ...] = ()
    dimension: int | None = None
    final: LinearSystemSpec | None = None

    @property
    def resolved(self) -> bool:
        return self.dimension is not None

    @property
    def outcome(self) -> str:
        return f"Resolved({self.dimension})" if self.resolved else f"Irreducible({self.final})"

    def pretty(self) -> str:
        lines = [str(s) for s in self.steps]
        if self.resolved:
            lines.append(f"{'BASE':<8}{self.final} = {self.dimension}")
        else:
            lines.append(f"{'STOP':<8}{self.final}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "start": str(self.start),
            "steps": [
                {"rule": s.rule, "before": str(s.before), "after": str(s.after), "t": s.shift} for s in self.steps
            ],
            "outcome": "resolved" if self.resolved else "irreducible",
            "dimension": self.dimension,
            "final": str(self.final),
        }


def _try(rule, spec):
    try:
        return rule(spec)
    except RuleError:
        return None


def reduce(spec: LinearSystemSpec, max_steps: int = 1000) -> ReductionTrace:
    """Apply base case, then Bezout, cone, and finally Cremona with t < 0, until stuck.

    Every rule strictly lowers j or n, so the loop terminates on its own;
    ``max_steps`` is only a safety cap.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    steps: list[Step] = []
    current = spec
    for _ in range(max_steps):
        dim = base_dimension(current)
        if dim is not None:
            return ReductionTrace(spec, tuple(steps), dim, current)
        nxt = _try(bezout_step, current)
        if nxt is not None:
            steps.append(Step("BEZOUT", current, nxt))
            current = nxt
            continue
        nxt = _try(cone_step, current)
        if nxt is not None:
            steps.append(Step("CONE", current, nxt))
            current = nxt
            continue
        if current.n >= 2 and cremona_shift(current) < 0:
            t = cremona_shift(current)
            nxt = _try(cremona_step, current)
            if nxt is not None:
                steps.append(Step("CREMONA", current, nxt, t))
                current = nxt
                continue
        break
    return ReductionTrace(spec, tuple(steps), None, current)
