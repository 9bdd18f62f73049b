"""Command-line front end.

Subcommands: eval, seiffert, compare, schur, distance, bounds (convex|shift),
shift-bounds, invariant, corpus, family, validate.  Output is deterministic
(fixed quasi-random sampling, 15 significant digits); exit status is nonzero
on verification failure (1) or usage/expression errors (2).
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional

from . import analysis, bounds, core, grammar, invariant, metric, series, transform
from .report import VerificationReport
from .sampling import zgrid


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return f"{float(x):.15g}"


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _report_out(rep: VerificationReport, csv_path: Optional[str]) -> int:
    for line in rep.lines():
        print(line)
    if csv_path:
        _write_csv(csv_path, ("name", "status", "margin", "witness"), rep.csv_rows())
        print(f"csv written to {csv_path}")
    return 0 if rep.passed else 1


def _cmd_eval(args) -> int:
    M = grammar.mean_expr(args.expr)
    val = M(float(args.x), float(args.y))
    print(f"{M.name}({_fmt(float(args.x))}, {_fmt(float(args.y))}) = {_fmt(val)}")
    return 0


def _cmd_seiffert(args) -> int:
    f = grammar.seiffert_expr(args.expr)
    if args.z:
        for z in args.z:
            print(f"f[{f.name}]({_fmt(float(z))}) = {_fmt(f(float(z)))}")
        return 0
    z = zgrid(args.grid, args.eps)
    v = f(z)
    if args.csv:
        _write_csv(args.csv, ("z", "value"), [(repr(a), repr(b)) for a, b in zip(z, v)])
        print(f"csv written to {args.csv}")
    else:
        for a, b in zip(z, v):
            print(f"{_fmt(a)},{_fmt(b)}")
    return 0


def _cmd_compare(args) -> int:
    M = grammar.mean_expr(args.expr1)
    N = grammar.mean_expr(args.expr2)
    verdict = analysis.compare(M, N, grid_size=args.grid, tol=args.tol)
    print(f"{M.name} vs {N.name}: {verdict.relation}")
    print(f"worst margin = {_fmt(verdict.worst_margin)}")
    print(f"witness z = {_fmt(verdict.witnesses)}")
    return 0


def _cmd_schur(args) -> int:
    M = grammar.mean_expr(args.expr)
    v = analysis.schur_classify(M, grid_size=args.grid)
    print(f"{M.name}: {v.classification}{' (strict)' if v.strict else ''}")
    print(f"worst monotonicity defect = {_fmt(v.worst_monotonicity_defect)}")
    return 0


def _cmd_distance(args) -> int:
    M = grammar.mean_expr(args.expr1)
    N = grammar.mean_expr(args.expr2)
    r = metric.mean_distance(M, N, grid=args.grid)
    print(f"d({M.name}, {N.name}) = {_fmt(r.distance)}")
    where = _fmt(r.extremizer_z)
    if r.endpoint:
        where += f" ({r.endpoint} endpoint limit)"
    print(f"extremizer z = {where}")
    print(f"mean-formula estimate = {_fmt(r.cross_check)}")
    print(f"both formulas agree = {r.converged}")
    return 0 if r.converged else 1


def _bounds_common(res: bounds.BoundResult, lower_label: str, upper_label: str, csv_path):
    def loc(x, endpoint):
        if endpoint:
            return endpoint
        return _fmt(x)

    print(f"{lower_label} = {_fmt(res.lower_constant)} at {loc(res.lower_extremizer, res.lower_endpoint)}")
    print(f"{upper_label} = {_fmt(res.upper_constant)} at {loc(res.upper_extremizer, res.upper_endpoint)}")
    if res.monotone:
        print(f"objective monotone ({res.monotone}); constants from endpoint limits")
    if res.hat_direction:
        print(f"inverted divided difference was {res.hat_direction}")
    if csv_path and res.objective_trace is not None:
        _write_csv(
            csv_path,
            ("z", "value"),
            [(repr(a), repr(b)) for a, b in res.objective_trace],
        )
        print(f"csv written to {csv_path}")


def _cmd_bounds_convex(args) -> int:
    K = grammar.mean_expr(args.k)
    M = grammar.mean_expr(args.m)
    N = grammar.mean_expr(args.n)
    res = bounds.convex_combination_bounds(K, M, N, trace=bool(args.csv))
    print(f"(1-mu) {K.name} + mu {N.name} <= {M.name} <= (1-nu) {K.name} + nu {N.name}")
    _bounds_common(res, "mu (weight on " + N.name + ")", "nu (weight on " + N.name + ")", args.csv)
    rep = bounds.check_convex_soundness(K, M, N, res, samples=2000)
    print("soundness:", "PASS" if rep.passed else "FAIL")
    return 0 if rep.passed else 1


def _cmd_bounds_shift(args) -> int:
    M = grammar.mean_expr(args.m)
    N = grammar.mean_expr(args.n)
    res = bounds.shift_bounds(M, N, trace=bool(args.csv))
    print(f"optimal contraction factors for {N.name} pinched around {M.name}")
    _bounds_common(res, "p0 (inf)", "q0 (sup)", args.csv)
    rep = bounds.check_shift_soundness(M, N, res, samples=2000)
    print("soundness:", "PASS" if rep.passed else "FAIL")
    return 0 if rep.passed else 1


def _cmd_invariant(args) -> int:
    M = grammar.mean_expr(args.m)
    N = grammar.mean_expr(args.n)
    mode = "functional" if args.functional else "pointwise_compound"
    cfg = invariant.InvariantSolveConfig(mode=mode)
    K = invariant.invariant_mean(M, N, cfg)
    if args.as_mean:
        core.MEANS[args.name or K.name] = K
        print(f"registered session mean {args.name or K.name!r}")
        rep = core.validate_mean(K, samples=512)
        print("validate:", "PASS" if rep.passed else "FAIL")
        return 0 if rep.passed else 1
    if args.x is None or args.y is None:
        raise SystemExit("invariant: provide x y or --as-mean")
    val = K(float(args.x), float(args.y))
    print(f"{K.name}({_fmt(float(args.x))}, {_fmt(float(args.y))}) = {_fmt(val)}")
    return 0


def _cmd_corpus(args) -> int:
    rep = analysis.verify_corpus(args.name, points=args.points)
    return _report_out(rep, args.csv)


def _cmd_family(args) -> int:
    f = transform.family_member(args.base, args.depth)
    band = core.validate_seiffert(f, samples=512)
    z = zgrid(args.grid, args.eps)
    v = f(z)
    print(f"{f.name}: band check {'PASS' if band.passed else 'FAIL'}")
    if args.csv:
        _write_csv(args.csv, ("z", "value"), [(repr(a), repr(b)) for a, b in zip(z, v)])
        print(f"csv written to {args.csv}")
    else:
        step = max(1, len(z) // 8)
        for a, b in zip(z[::step], v[::step]):
            print(f"{_fmt(a)},{_fmt(b)}")
    return 0 if band.passed else 1


def _cmd_validate(args) -> int:
    M = grammar.mean_expr(args.expr)
    rep = core.validate_mean(M, samples=args.samples)
    return _report_out(rep, args.csv)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="seiffert",
        description="Numerics for symmetric homogeneous means via their Seiffert representatives",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        return p

    p = add("eval", _cmd_eval, help="evaluate a mean expression at a pair")
    p.add_argument("expr")
    p.add_argument("x")
    p.add_argument("y")

    p = add("seiffert", _cmd_seiffert, help="evaluate the Seiffert representative")
    p.add_argument("expr")
    p.add_argument("z", nargs="*")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--eps", type=float, default=1e-8)
    p.add_argument("--csv")

    p = add("compare", _cmd_compare, help="order verdict for two means")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--grid", type=int, default=2048)
    p.add_argument("--tol", type=float, default=1e-13)

    p = add("schur", _cmd_schur, help="Schur-convexity classification")
    p.add_argument("expr")
    p.add_argument("--grid", type=int, default=2048)

    p = add("distance", _cmd_distance, help="metric distance between two means")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--grid", type=int, default=2048)

    p = add("bounds", _dispatch_bounds, help="optimal bound constants")
    p.add_argument("kind", choices=("convex", "shift"))
    p.add_argument("k", nargs="?")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--csv")

    p = add("shift-bounds", _cmd_bounds_shift, help="alias for 'bounds shift'")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--csv")

    p = add("invariant", _cmd_invariant, help="invariant mean of a pair")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("x", nargs="?")
    p.add_argument("y", nargs="?")
    p.add_argument("--as-mean", action="store_true", dest="as_mean")
    p.add_argument("--name")
    p.add_argument("--functional", action="store_true")

    p = add("corpus", _cmd_corpus, help="verify a named inequality corpus")
    p.add_argument("name", choices=analysis.CORPUS_NAMES)
    p.add_argument("--points", type=int, default=10000)
    p.add_argument("--csv")

    p = add("family", _cmd_family, help="iterated integral-transform member")
    p.add_argument("base", choices=transform.FAMILY_BASES)
    p.add_argument("depth", type=int)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--eps", type=float, default=1e-8)
    p.add_argument("--csv")

    p = add("validate", _cmd_validate, help="mean-axiom validation report")
    p.add_argument("expr")
    p.add_argument("--samples", type=int, default=4096)
    p.add_argument("--csv")

    return ap


def _dispatch_bounds(args) -> int:
    # optional leading positional: `bounds shift M N` parses as k=None, m=M, n=N
    if args.kind == "shift":
        if args.k is not None:
            print("bounds shift takes two expressions", file=sys.stderr)
            return 2
        return _cmd_bounds_shift(args)
    if args.k is None:
        print("bounds convex takes three expressions", file=sys.stderr)
        return 2
    return _cmd_bounds_convex(args)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (grammar.ParseError, grammar.ElaborationError) as e:
        print(f"expression error: {e}", file=sys.stderr)
        return 2
    except (
        core.BandViolation,
        analysis.MeanOrderError,
        invariant.ContractionError,
        invariant.ConvergenceError,
        series.SeriesSpecError,
        ValueError,
        ZeroDivisionError,
        RuntimeError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
