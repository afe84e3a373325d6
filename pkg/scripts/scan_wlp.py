"""Scan WLP failure verdicts over even n and write the threshold fixture.

The threshold for n is the least applicable d after which every applicable
d in the scan fails.
"""
from __future__ import annotations

import argparse
import csv
import json
from pathlib import Path

from fatpoints.wlp import CSV_COLUMNS, scan_failure

ROOT = Path(__file__).resolve().parent.parent


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmin", type=int, default=8)
    ap.add_argument("--nmax", type=int, default=20)
    ap.add_argument("--dmax", type=int, default=400)
    ap.add_argument("--fixture", type=Path, default=ROOT / "tests" / "fixtures" / "wlp_thresholds.json")
    ap.add_argument("--csv", type=Path, default=None, help="also write every row here")
    args = ap.parse_args(argv)

    report = scan_failure(range(args.nmin, args.nmax + 1, 2), range(2, args.dmax + 1))
    blob = {"dmax": args.dmax, "thresholds": {str(n): d for n, d in report.thresholds.items()}}
    args.fixture.parent.mkdir(parents=True, exist_ok=True)
    args.fixture.write_text(json.dumps(blob, indent=2, sort_keys=True) + "\n")
    if args.csv:
        with args.csv.open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            w.writeheader()
            w.writerows(report.csv_rows())
    for n, d0 in report.thresholds.items():
        fails = sum(r.verdict.value == "Fails" for r in report.rows if r.n == n)
        print(f"n={n:2d} threshold={d0} fails={fails}")


if __name__ == "__main__":
    main()
