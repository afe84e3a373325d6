"""Scan the Eulerian difference shape and the peak second-difference signs."""
from __future__ import annotations

import argparse

from fatpoints.combinatorics import peak_second_difference, scan_conjecture_71


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=40)
    ap.add_argument("--mmax", type=int, default=100)
    args = ap.parse_args(argv)

    report = scan_conjecture_71(args.nmax)
    print(f"difference shape violations for n <= {args.nmax}: {[v.n for v in report.violations] or 'none'}")
    signs = {m: peak_second_difference(m) > 0 for m in range(2, args.mmax + 1)}
    positive = [m for m, pos in signs.items() if pos]
    print(f"peak second difference positive at m = {positive}, negative elsewhere up to {args.mmax}")


if __name__ == "__main__":
    main()
