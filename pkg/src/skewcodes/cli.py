"""Command line interface.

Field elements are written as exponents of the canonical primitive element
``xi`` (``"5"`` is ``xi^5``, ``"0"`` is ``xi^0 = 1``) and ``"-"`` is zero.
``field-info --show-table`` prints the exponent to coordinates dictionary.

Exit codes: 0 ok, 1 failing verify cells, 2 usage or input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import _kernels
from .classify import ClassMode, count_formula, count_vs_oracle, partition
from .codes import code_from_generator, right_divisors, weight_distribution
from .coeff_ring import FrobPower, parse_field_spec
from .errors import BudgetExceededError, SkewCodesError
from .homs import DEFAULT_BUDGET, enumerate_homs, nonmonomial_structure_check, weight_report
from .petit import PetitAlgebra, associator_scan, is_associative_algebra
from .skew_poly import SkewPoly
from .verify import DEFAULT_GRID, SUITES, parse_grid, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(SkewCodesError):
    pass


def _emit(obj, fmt, rows=None, header=None, out=None):
    out = out or sys.stdout
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)
    else:
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _sigma(ctx, s):
    if s < 0:
        raise UsageError("--s must be nonnegative")
    return FrobPower(s, ctx.r)


def _algebra_from_args(ctx, args, which="a"):
    sigma = _sigma(ctx, args.s)
    f = getattr(args, "f", None)
    if which == "a" and f:
        coeffs = [ctx.decode(tok) for tok in f.split(",")]
        return PetitAlgebra(ctx, sigma, SkewPoly(ctx, sigma, coeffs))
    value = getattr(args, which)
    if value is None:
        raise UsageError(f"--{which} is required")
    if args.m is None or args.m < 1:
        raise UsageError("--m must be a positive integer")
    return PetitAlgebra.constacyclic(ctx, sigma, args.m, ctx.decode(value))


def cmd_field_info(args):
    ctx = parse_field_spec(args.field)
    obj = {
        "schema": "skewcodes.field-info/1",
        "field": ctx.spec,
        "p": ctx.p,
        "r": ctx.r,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "xi_coords": ctx.coords(ctx.xi),
        "backend": _kernels.BACKEND,
        "automorphisms": [{"s": a.s, "order": a.order} for a in ctx.automorphisms()],
    }
    if args.show_table:
        obj["table"] = ctx.show_table()
    rows = [[row["encoding"], " ".join(map(str, row["coords"]))] for row in ctx.show_table()]
    _emit(obj, args.format, rows, ["encoding", "coords"])
    return EXIT_OK


def cmd_algebra(args):
    ctx = parse_field_spec(args.field)
    alg = _algebra_from_args(ctx, args)
    obj = {
        "schema": "skewcodes.algebra/1",
        "field": ctx.spec,
        "s": alg.sigma.s,
        "m": alg.m,
        "n": alg.n,
        "f": [ctx.to_json(c) for c in alg.f.coeffs],
        "constacyclic_a": ctx.to_json(alg.constacyclic_a) if alg.constacyclic_a is not None else None,
    }
    if alg.constacyclic_a is not None:
        obj["associative"] = is_associative_algebra(alg)
    if args.associator:
        wit = associator_scan(alg)
        obj["associator_zero"] = wit is None
        if wit is not None:
            obj["associator_witness"] = [[ctx.to_json(c) for c in x.coeffs] for x in wit]
    rows = [[k, json.dumps(v)] for k, v in sorted(obj.items())]
    _emit(obj, args.format, rows, ["key", "value"])
    return EXIT_OK


def cmd_homs(args):
    ctx = parse_field_spec(args.field)
    src = _algebra_from_args(ctx, args, "a")
    tgt = _algebra_from_args(ctx, args, "b")
    restrict = "all" if args.all else "monomial"
    taus = [args.tau] if args.tau is not None else None
    found = enumerate_homs(src, tgt, restrict, prefilter=not args.no_prefilter, budget=args.budget, taus=taus)
    certs = []
    for cert in found:
        if args.weights:
            cert.weight_preserving = weight_report(cert.spec, args.budget).preserving
        d = cert.to_dict()
        d["monomial"] = cert.spec.is_monomial()
        d["structure_ok"] = nonmonomial_structure_check(cert)
        certs.append(d)
    obj = {
        "schema": "skewcodes.homs/1",
        "field": ctx.spec,
        "s": src.sigma.s,
        "m": src.m,
        "a": ctx.to_json(src.a),
        "b": ctx.to_json(tgt.a),
        "restrict": restrict,
        "examined": found.examined,
        "count": len(certs),
        "degenerate": [c.verdict for c in found.degenerate],
        "homs": certs,
    }
    rows = [[c["spec"]["tau"], " ".join("-" if v is None else str(v) for v in c["spec"]["g_image"]), c["verdict"]]
            for c in certs]
    _emit(obj, args.format, rows, ["tau", "g_image", "verdict"])
    return EXIT_OK


def cmd_classify(args):
    ctx = parse_field_spec(args.field)
    sigma = _sigma(ctx, args.s)
    mode = ClassMode.parse(args.mode)
    rep = partition(ctx, sigma, args.m, mode, args.method)
    if sigma.s >= 1 and ctx.r % sigma.s == 0:
        cmp = count_vs_oracle(ctx.p, ctx.r, sigma.s, args.m, args.method)
        formula = count_formula(ctx.p, ctx.r, sigma.s, args.m)
        rep.w, rep.t, rep.formula_N = formula["w"], formula["t"], formula["N"]
        rep.oracle_N, rep.agree = cmp.oracle_N, cmp.agree
        rep.per_case, rep.per_case_agree = cmp.per_case, cmp.per_case_agree
        rep.witnesses = cmp.witnesses
    obj = {"schema": "skewcodes.classify/1", **rep.to_dict()}
    rows = [[i, " ".join(map(str, c)), f["meets_subfield"], f["inside_subfield"]]
            for i, (c, f) in enumerate(zip(rep.classes, rep.flags))]
    _emit(obj, args.format, rows, ["class", "exponents", "meets_subfield", "inside_subfield"])
    return EXIT_OK


def cmd_codes(args):
    ctx = parse_field_spec(args.field)
    alg = _algebra_from_args(ctx, args)
    degrees = [args.degree] if args.degree else list(range(1, alg.m))
    out = []
    for d in degrees:
        for g in right_divisors(alg, d, args.budget):
            code = code_from_generator(alg, g)
            wd = weight_distribution(code, args.budget)
            out.append({
                "field": ctx.spec,
                "s": alg.sigma.s,
                "m": alg.m,
                "a": ctx.to_json(alg.a),
                "g": [ctx.to_json(c) for c in g.coeffs],
                "dim": code.dim,
                "d_min": wd.min_distance,
                "weight_distribution": list(wd.counts),
            })
    obj = {"schema": "skewcodes.codes/1", "codes": out}
    rows = [[r["field"], r["s"], r["m"], ctx.encode(alg.a), " ".join("-" if v is None else str(v) for v in r["g"]),
             r["dim"], r["d_min"], " ".join(map(str, r["weight_distribution"]))] for r in out]
    _emit(obj, args.format, rows, ["field", "s", "m", "a", "g", "dim", "d_min", "weight_distribution"])
    return EXIT_OK


def cmd_verify(args):
    suites = list(SUITES) if not args.suite or "all" in args.suite else args.suite
    for s in suites:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    grid = parse_grid(args.grid) if args.grid is not None else DEFAULT_GRID
    card = run_suites(suites, grid, args.budget, args.jobs)
    text = card.to_csv(args.timings) if args.format == "csv" else card.to_json(args.timings) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = card.summary()
    print(f"verify: {summary['pass']} pass, {summary['fail']} fail, {summary['flagged']} flagged, "
          f"{summary['skipped']} skipped", file=sys.stderr)
    return EXIT_OK if card.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcodes", description="Petit algebras, their monomial maps and skew constacyclic codes")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, algebra=True, fmt=True):
        p.add_argument("--field", required=True, help="field as p^r, e.g. 3^2")
        if algebra:
            p.add_argument("--s", type=int, default=1, help="sigma(x) = x^(p^s)")
            p.add_argument("--m", type=int, help="degree of t^m - a")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("field-info", help="field parameters and the element table")
    common(p, algebra=False)
    p.add_argument("--show-table", action="store_true", help="include the exponent to coordinates table")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("algebra", help="describe S_f")
    common(p)
    p.add_argument("--a", help="constant a of t^m - a (exponent encoding)")
    p.add_argument("--f", help="comma-separated coefficients of a monic f, low to high")
    p.add_argument("--associator", action="store_true", help="scan basis triples for a nonzero associator")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("homs", help="enumerate homomorphisms S_a -> S_b")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--all", action="store_true", help="all images of t, not only monomials")
    p.add_argument("--tau", type=int, help="restrict to tau(x) = x^(p^tau)")
    p.add_argument("--no-prefilter", action="store_true", help="scan every candidate image")
    p.add_argument("--weights", action="store_true", help="report weight preservation")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("classify", help="partition K^x into classes")
    common(p)
    p.add_argument("--mode", default="m-sigma-equivalence", choices=[m.value for m in ClassMode])
    p.add_argument("--method", default="criterion", choices=("criterion", "oracle"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("codes", help="codes from right divisors of t^m - a")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--degree", type=int, help="only divisors of this degree")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("verify", help="run the audit suites")
    p.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} or all (repeatable)")
    p.add_argument("--grid", help='tuples "p,r,s,m;..." (m may be a range a..b)')
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include per-cell runtimes (not reproducible)")
    p.add_argument("--out", help="write the scorecard here instead of stdout")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"skewcodes: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SkewCodesError, ValueError) as exc:
        print(f"skewcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
