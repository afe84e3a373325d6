"""Command-line front end.

Exit codes: 0 success, 1 user error, 2 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import closed_forms as cf
from . import splines, wlp
from .cache import ResultCache, request_hash
from .combinatorics import eulerian, scan_conjecture_71
from .hilbert import ci_hilbert
from .linalg import Field
from .linsys import LinearSystemSpec, parse_mults, reduce
from .verify import SUITES, SuiteConfig, run_suite



class UserError(Exception):
    pass


class InvariantViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UserError(f"{self.prog}: {message}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if hasattr(x, "value") and not isinstance(x, (int, float, str, bool)):
        return x.value  # enums
    return x


def _payload(args, inputs: dict, value, status="exact", source="", table=None, text=None) -> dict:
    out = {
        "command": args.command,
        "inputs": _jsonable(inputs),
        "value": _jsonable(value),
        "status": status,
        "source": source,
        "seed": args.seed,
        "field": str(args.field),
    }
    if table is not None:
        out["table"] = _jsonable(table)
    if text is not None:
        out["text"] = text
    return out


def _config_class(args) -> cf.ConfigClass:
    try:
        return cf.ConfigClass(args.cls, args.n, args.dept)
    except ValueError as exc:
        raise UserError(str(exc)) from exc


# command handlers: each returns a payload dict


def cmd_eulerian(args):
    return _payload(args, {"i": args.i, "j": args.j}, eulerian(args.i, args.j), source="alternating sum")


def cmd_euler_scan(args):
    scan = scan_conjecture_71(args.nmax)
    rows = [
        {"n": r.n, "diffs": " ".join(map(str, r.diffs)), "pattern": r.pattern, "expected": r.expected, "ok": r.ok}
        for r in scan.rows
    ]
    bad = [r.n for r in scan.violations]
    return _payload(args, {"nmax": args.nmax}, {"violations": bad}, status="scan", source="Eulerian differences", table=rows)


def cmd_hilbert(args):
    exps = parse_mults(args.exps)
    table = ci_hilbert(args.vars, exps, args.jmax)
    return _payload(args, {"vars": args.vars, "exps": exps, "jmax": args.jmax}, list(table.values),
                    source="Koszul inclusion-exclusion")


def cmd_linsys(args):
    spec = LinearSystemSpec(args.n, args.deg, tuple(parse_mults(args.mults)))
    trace = reduce(spec, args.max_steps)
    status = "exact" if trace.resolved else "irreducible"
    return _payload(args, {"n": args.n, "deg": args.deg, "mults": list(spec.mults)}, trace.dimension,
                    status=status, source="Cremona/Bezout/cone reduction", table=trace.to_json()["steps"],
                    text=trace.pretty())


def _closed(args, res: cf.ClosedFormResult, inputs):
    return _payload(args, inputs, res.value, status=res.status.value, source=res.source)


def cmd_alpha(args):
    cls = _config_class(args)
    return _closed(args, cf.alpha_symbolic(cls, args.k), {"class": str(cls), "k": args.k})


def cmd_reg(args):
    cls = _config_class(args)
    return _closed(args, cf.regularity_powers(cls, args.d), {"class": str(cls), "d": args.d})


def cmd_waldschmidt(args):
    cls = _config_class(args)
    return _payload(args, {"class": str(cls)}, cf.waldschmidt(cls), source="limit of alpha(I^(k))/k")


def cmd_chudnovsky(args):
    cls = _config_class(args)
    return _payload(args, {"class": str(cls)}, cf.chudnovsky_check(cls), source="Waldschmidt constant vs alpha")


def cmd_demailly(args):
    cls = _config_class(args)
    v = cf.demailly_check(cls, args.k)
    status = "undecided" if v is cf.UNDECIDED else "exact"
    return _payload(args, {"class": str(cls), "k": args.k}, None if v is cf.UNDECIDED else v, status=status,
                    source="Waldschmidt constant vs alpha of symbolic power")


def cmd_resurgence(args):
    cls = _config_class(args)
    return _payload(args, {"class": str(cls)}, cf.resurgence(cls), source="2 / Waldschmidt constant")


def cmd_verlinde(args):
    v = cf.verlinde(args.n, Fraction(args.j))
    return _payload(args, {"n": args.n, "j": args.j}, v.rounded, source="trigonometric sum",
                    table=[{"raw": v.raw, "rounded": v.rounded, "error": v.error}])


def _scan_one(n: int, dmax: int):
    return wlp.scan_failure([n], range(2, dmax + 1))


def cmd_wlp(args):
    if args.scan:
        ns = list(range(args.nmin, args.nmax + 1, 2))
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as ex:
                parts = list(ex.map(_scan_one, ns, [args.dmax] * len(ns)))
        else:
            parts = [_scan_one(n, args.dmax) for n in ns]
        rows = [r.row() for p in parts for r in p.rows]
        thresholds = {n: p.thresholds[n] for n, p in zip(ns, parts)}
        return _payload(args, {"nmin": args.nmin, "nmax": args.nmax, "dmax": args.dmax},
                        {str(k): v for k, v in thresholds.items()}, status="scan",
                        source="sign of P_{m,q}(t)", table=rows)
    if args.n is None or args.d is None:
        raise UserError("wlp needs --n and --d, or --scan")
    if args.n % 2 == 0 and args.n >= 8:
        v = wlp.wlp_failure_witness(args.n, args.d)
        return _payload(args, {"n": args.n, "d": args.d}, v.verdict.value, status="one-sided",
                        source=v.clause, table=[v.row()])
    has, note = wlp.literature_verdict(args.n, args.d)
    return _payload(args, {"n": args.n, "d": args.d}, "Holds" if has else "Fails", status=note,
                    source="literature lookup")


def cmd_spline(args):
    if args.sign is not None:
        m = args.sign
        return _payload(args, {"m": m}, splines.second_diff_sign(m), source="exact B-spline second difference",
                        table=[{"m": m, "value": splines.second_diff(m)}])
    if args.i is None:
        raise UserError("spline needs --i unless --sign is given")
    b = splines.bspline(args.i)
    if args.lemma65:
        rep = splines.lemma65_check(args.i)
        if not rep.ok:
            raise InvariantViolation(f"(i-1)! B_i(j) != A(i-1, j-1) at i={args.i}: {rep.lhs} vs {rep.rhs}")
        return _payload(args, {"i": args.i}, list(rep.lhs), source="(i-1)! B_i(j) = A(i-1, j-1)")
    if args.eval is not None:
        x = Fraction(args.eval)
        return _payload(args, {"i": args.i, "x": str(x)}, splines.evaluate(b, x), source="exact recursion")
    raise UserError("spline needs one of --eval, --lemma65, --sign")


def _suite_lines(name: str, seeds: tuple[int, ...], field: str):
    cfg = SuiteConfig(seeds, Field.parse(field))
    total, bad = 0, []
    for chk in run_suite(name, cfg):
        total += 1
        if not chk.ok:
            bad.append(chk.line())
    return name, total, bad


def cmd_verify(args):
    seeds = tuple(range(args.seed, args.seed + args.seeds))
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UserError(f"unknown suite {args.suite!r}")
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_suite_lines, names, [seeds] * len(names), [str(args.field)] * len(names)))
    else:
        results = [_suite_lines(n, seeds, str(args.field)) for n in names]
    rows = [{"suite": n, "checks": t, "mismatches": len(b)} for n, t, b in results]
    mismatches = [line for _, _, b in results for line in b]
    payload = _payload(args, {"suite": args.suite, "seeds": args.seeds}, not mismatches, status="verified",
                       source="rank oracle", table=rows)
    if mismatches:
        payload["mismatches"] = mismatches
    return payload


def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, suppress: bool):
        # subcommands repeat the flags without defaults so they never mask earlier values
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        parser.add_argument("--format", choices=["json", "csv", "pretty"], default=dflt(None))
        parser.add_argument("--seed", type=int, default=dflt(0))
        parser.add_argument("--field", default=dflt("prime"), help="rational | prime | prime:<p>")
        parser.add_argument("--cache", default=dflt(None), help="JSON-lines result cache (default: $FATPOINTS_CACHE)")
        parser.add_argument("--jobs", type=int, default=dflt(1))

    common = _Parser(add_help=False)
    global_flags(common, suppress=True)
    p = _Parser(prog="fatpoints", description="Fat points, powers of linear forms, and related numerics.")
    global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    sp = add("eulerian", cmd_eulerian, "Eulerian number A(i, j)")
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)

    sp = add("euler-scan", cmd_euler_scan, "shape of k -> A(n,k+1) - A(n,k)")
    sp.add_argument("--nmax", type=int, required=True)

    sp = add("hilbert", cmd_hilbert, "Hilbert function of a monomial complete intersection")
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--exps", required=True, help="comma list, b^e repeats")
    sp.add_argument("--jmax", type=int, default=None)

    sp = add("linsys", cmd_linsys, "reduce a fat-point linear system")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--mults", default="", help="comma list, b^e repeats")
    sp.add_argument("--max-steps", type=int, default=1000)

    def with_class(sp, k=False, d=False):
        sp.add_argument("--class", dest="cls", required=True, choices=[t.value for t in cf.ClassTag])
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--dept", type=int, default=None)
        if k:
            sp.add_argument("--k", type=int, required=True)
        if d:
            sp.add_argument("--d", type=int, required=True)

    with_class(add("alpha", cmd_alpha, "initial degree of a symbolic power"), k=True)
    with_class(add("reg", cmd_reg, "regularity of R/(l_i^d)"), d=True)
    with_class(add("waldschmidt", cmd_waldschmidt, "Waldschmidt constant"))
    with_class(add("chudnovsky", cmd_chudnovsky, "Chudnovsky bound check"))
    with_class(add("demailly", cmd_demailly, "Demailly bound check"), k=True)
    with_class(add("resurgence", cmd_resurgence, "resurgence"))

    sp = add("verlinde", cmd_verlinde, "trigonometric dimension formula")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--j", required=True, help="integer, or half-integer such as 1/2 for odd n")

    sp = add("wlp", cmd_wlp, "weak Lefschetz failure witness")
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--scan", action="store_true")
    sp.add_argument("--nmin", type=int, default=8)
    sp.add_argument("--nmax", type=int, default=20)
    sp.add_argument("--dmax", type=int, default=400)

    sp = add("spline", cmd_spline, "uniform B-splines")
    sp.add_argument("--i", type=int)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--eval", default=None, help="rational point, e.g. 3/2")
    g.add_argument("--lemma65", action="store_true", help="compare (i-1)! B_i(j) with Eulerian numbers")
    g.add_argument("--sign", type=int, default=None, metavar="M",
                   help="sign of B_2m(m) - 2B_2m(m-1) + B_2m(m-2)")

    sp = add("verify", cmd_verify, "oracle cross-validation suites")
    sp.add_argument("--suite", default="all", help=f"all | {' | '.join(SUITES)}")
    sp.add_argument("--seeds", type=int, default=3)
    return p


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    if fmt == "csv":
        rows = payload.get("table")
        if not rows or not isinstance(rows, list) or not isinstance(rows[0], dict):
            rows = [{k: json.dumps(v) if isinstance(v, (dict, list)) else v
                     for k, v in payload.items() if k not in ("table", "text")}]
        buf = io.StringIO()
        fields = list(wlp.CSV_COLUMNS) if payload["command"] == "wlp" else list(rows[0])
        w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if "text" in payload:
        return payload["text"]
    lines = [f"{payload['command']}: {payload['value']}  ({payload['status']}; {payload['source']})"]
    for row in payload.get("table") or []:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
    for line in payload.get("mismatches", []):
        lines.append(line)
    return "\n".join(lines)


UNCACHED = {"verify"}


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.field = Field.parse(args.field)
    except ValueError as exc:
        raise UserError(str(exc)) from exc
    if args.jobs < 1:
        raise UserError("--jobs must be >= 1")
    fmt = args.format or ("pretty" if sys.stdout.isatty() else "json")
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("func", "format", "seed", "field", "cache", "jobs", "command")}
    cache = None if args.command in UNCACHED else ResultCache.from_env(args.cache)
    key = request_hash(args.command, _jsonable(inputs), args.seed, str(args.field))
    payload = cache.lookup(key) if cache else None
    if payload is None:
        payload = args.func(args)
        if cache:
            cache.store(key, payload)
    code = 2 if payload.get("mismatches") else 0
    return code, render(payload, fmt)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        code, text = run(argv)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OverflowError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
