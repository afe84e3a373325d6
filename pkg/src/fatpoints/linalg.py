"""Exact rank and inversion over a prime field or the rationals."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

try:
    import flint
except ImportError:  # pragma: no cover - numpy path is always available
    flint = None

DEFAULT_PRIME = 2_147_483_647  # 2^31 - 1: products of residues stay below 2^62


def rank_mod_p(matrix, p: int = DEFAULT_PRIME) -> int:
    """Rank over GF(p); uses FLINT's ``nmod_mat`` when installed."""
    rows = [list(map(int, r)) for r in matrix]
    if not rows or not rows[0]:
        return 0
    if flint is not None:
        return flint.nmod_mat(rows, p).rank()
    return rank_mod_p_numpy(rows, p)


def rank_mod_p_numpy(matrix, p: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over GF(p) by dense row reduction in numpy.

    ``p`` must be below 2^31 so that residue products fit in int64.
    """
    if p >= 2**31:
        raise ValueError(f"prime {p} too large for int64 elimination")
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2 or a.size == 0:
        return 0
    a %= p
    if a.shape[0] > a.shape[1]:
        a = np.ascontiguousarray(a.T)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank, c:] = (a[rank, c:] * inv) % p
        below = a[rank + 1 :, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + rank + 1
            a[idx, c:] = (a[idx, c:] - np.outer(a[idx, c], a[rank, c:]) % p) % p
        rank += 1
    return rank


def rank_rational(matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer rows."""
    rows = [_integral_row(r) for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            f = ri[c]
            rows[i] = [(pr[c] * ri[k] - f * pr[k]) // prev for k in range(cols)]
        prev = pr[c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _integral_row(row) -> list[int]:
    fr = [Fraction(x) for x in row]
    den = math.lcm(*(x.denominator for x in fr)) if fr else 1
    return [int(x * den) for x in fr]


@dataclass(frozen=True)
class Field:
    """Coefficient field for oracle computations: GF(p) when ``prime`` is set, else Q."""

    prime: int | None = DEFAULT_PRIME

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip().lower()
        if text in ("rational", "q", "rationals"):
            return cls(None)
        if text == "prime":
            return cls(DEFAULT_PRIME)
        if text.startswith("prime:"):
            p = int(text.split(":", 1)[1])
            if p < 2 or not _is_probable_prime(p):
                raise ValueError(f"{p} is not prime")
            return cls(p)
        raise ValueError(f"unknown field {text!r}; use 'rational' or 'prime:<p>'")

    @property
    def is_prime(self) -> bool:
        return self.prime is not None

    def __str__(self) -> str:
        return "rational" if self.prime is None else f"prime:{self.prime}"

    def reduce(self, x):
        if self.prime is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.prime) % self.prime
        return int(x) % self.prime

    def rank(self, matrix) -> int:
        if self.prime is None:
            return rank_rational(matrix)
        return rank_mod_p(matrix, self.prime)

    def inverse(self, matrix) -> list[list]:
        """Gauss-Jordan inverse of a square matrix; raises if singular."""
        n = len(matrix)
        a = [[self.reduce(x) for x in row] + [self.reduce(int(i == k)) for k in range(n)] for i, row in enumerate(matrix)]
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv = self._inv(a[c][c])
            a[c] = [self._mul(x, inv) for x in a[c]]
            for i in range(n):
                if i != c and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [self._sub(x, self._mul(f, y)) for x, y in zip(a[i], a[c])]
        return [row[n:] for row in a]

    def _inv(self, x):
        return 1 / x if self.prime is None else pow(x, -1, self.prime)

    def _mul(self, x, y):
        return x * y if self.prime is None else x * y % self.prime

    def _sub(self, x, y):
        return x - y if self.prime is None else (x - y) % self.prime


def _is_probable_prime(p: int) -> bool:
    if p < 4:
        return p in (2, 3)
    if p % 2 == 0:
        return False
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % p == 0:
            continue
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True
