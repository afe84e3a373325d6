"""Run every cross-validation suite and print a per-suite summary."""
from __future__ import annotations

import argparse
import sys
import time

from fatpoints.linalg import Field
from fatpoints.verify import SUITES, SuiteConfig, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--field", default="prime")
    ap.add_argument("--suite", default="all", choices=["all", *SUITES])
    args = ap.parse_args(argv)
    cfg = SuiteConfig(tuple(range(args.seeds)), Field.parse(args.field))
    names = list(SUITES) if args.suite == "all" else [args.suite]
    bad = 0
    for name in names:
        t0 = time.perf_counter()
        checks = list(run_suite(name, cfg))
        miss = [c for c in checks if not c.ok]
        bad += len(miss)
        print(f"{name:10} checks={len(checks):5d} mismatches={len(miss)} {time.perf_counter() - t0:6.1f}s")
        for c in miss:
            print("  " + c.line())
    return 2 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
