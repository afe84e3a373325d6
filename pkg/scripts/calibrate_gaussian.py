"""Measure max i * |deviation| of scaled B-spline derivatives from the Gaussian.

The result, rounded up, is frozen as ``splines.GAUSSIAN_C``.
"""
from __future__ import annotations

import argparse

import numpy as np

from fatpoints.splines import gaussian_compare


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--imin", type=int, default=8)
    ap.add_argument("--imax", type=int, default=64)
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--grid", type=int, default=25, help="samples on [-3, 3]")
    args = ap.parse_args(argv)
    xs = np.linspace(-3.0, 3.0, args.grid)
    print("k,worst_i,worst_scaled_dev")
    overall = 0.0
    for k in range(args.kmax + 1):
        best = (0, 0.0)
        for i in range(max(args.imin, k + 3), args.imax + 1):
            r = gaussian_compare(i, k, xs, c=float("inf"))
            if i * r.max_deviation > best[1]:
                best = (i, i * r.max_deviation)
        overall = max(overall, best[1])
        print(f"{k},{best[0]},{best[1]:.4f}")
    print(f"# overall max i*dev = {overall:.4f}")


if __name__ == "__main__":
    main()
