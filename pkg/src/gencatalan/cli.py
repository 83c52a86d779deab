"""Command-line front end. Exit status: 0 ok, 1 verification failure, 2 usage error."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import factorization as fz
from .bench import format_table, records_to_csv, records_to_json, run_bench
from .catbert import (
    SEQUENCE_ID,
    catbert_det_sequence,
    catbert_inverse,
    catbert_matrix,
    fetch_bfile,
    load_snapshot,
    oeis_compare,
    parse_bfile,
)
from .exact import format_rational
from .matrices import det_oracle, hankel_G, invert_oracle
from .params import GRID_A, GRID_P, GRID_Q, GCParams, param_grid
from .sequences import gen_catalan
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_params(sp, n=True):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, default=0)
    if n:
        sp.add_argument("--n", type=int, required=True)


def _add_format(sp):
    sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")


def _params(args) -> GCParams:
    try:
        return GCParams(args.p, args.q, args.a)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _positive(value, name):
    if value < 1:
        raise UsageError(f"{name} must be a positive integer")
    return value


def _emit_matrix(M, fmt, out):
    if fmt == "json":
        out.write(M.to_json() + "\n")
    elif fmt == "csv":
        out.write(M.to_csv())
    else:
        for row in M.to_strings():
            out.write(" ".join(row) + "\n")


def cmd_seq(args, out):
    params = _params(args)
    terms = gen_catalan(params, _positive(args.count, "count")).terms
    if args.format == "json":
        out.write(json.dumps([str(t) for t in terms]) + "\n")
    elif args.format == "csv":
        out.write(",".join(str(t) for t in terms) + "\n")
    else:
        out.write(" ".join(str(t) for t in terms) + "\n")
    return 0


def cmd_hankel(args, out):
    _emit_matrix(hankel_G(_params(args), _positive(args.n, "n")), args.format, out)
    return 0


def cmd_invert(args, out, err):
    params = _params(args)
    n = _positive(args.n, "n")
    inv = fz.scaled_inverse(params, n) if args.scaled else fz.inverse_via_LMK(params, n)
    status = 0
    if args.oracle:
        G = hankel_G(params, n)
        oracle = invert_oracle(G.scale(Fraction(1, params.q)) if args.scaled else G)
        if oracle != inv:
            err.write("factorized inverse disagrees with elimination\n")
            status = 1
        else:
            err.write("elimination cross-check: ok\n")
    _emit_matrix(inv, args.format, out)
    return status


def cmd_det(args, out, err):
    params = _params(args)
    n = _positive(args.n, "n")
    formula = fz.det_scaled_inverse_formula if args.scaled else fz.det_inverse_formula
    result = {}
    if args.method in ("formula", "both"):
        result["formula"] = formula(params, n)
    if args.method in ("oracle", "both"):
        G = hankel_G(params, n)
        if args.scaled:
            G = G.scale(Fraction(1, params.q))
        result["oracle"] = 1 / det_oracle(G)
    status = 0
    if len(set(result.values())) > 1:
        err.write("formula and oracle determinants differ\n")
        status = 1
    if args.format == "json":
        out.write(json.dumps({k: format_rational(v) for k, v in result.items()}) + "\n")
    else:
        for k, v in result.items():
            out.write(f"{k} {format_rational(v)}\n")
    return status


def _grid_from_args(args):
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise UsageError("--p and --q must be given together")
        return [_params(args)]
    try:
        return param_grid(args.p_list, args.q_list, args.a_list)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args, out, err):
    if args.all:
        suites = list(SUITES)
    elif args.suite:
        suites = args.suite
    else:
        raise UsageError("give --suite NAME (repeatable) or --all")
    if args.a is None:
        args.a = 0
    grid = _grid_from_args(args)
    reports = []
    for name in suites:
        reports.extend(run_suite(name, grid, args.n_max))
    failed = [r for r in reports if not r.ok]
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports]) + "\n")
    else:
        for r in reports:
            if args.verbose or not r.ok:
                out.write(r.summary() + "\n")
        out.write(f"{len(reports)} report(s), {len(failed)} with violations\n")
    return 1 if failed else 0


def cmd_catbert(args, out, err):
    n = _positive(args.n, "n")
    status = 0
    if args.show == "matrix":
        _emit_matrix(catbert_matrix(n).matrix, args.format, out)
    elif args.show == "inverse":
        _emit_matrix(catbert_inverse(n), args.format, out)
    elif args.show == "dets":
        dets = catbert_det_sequence(n)
        if args.format == "json":
            out.write(json.dumps([str(d) for d in dets]) + "\n")
        else:
            for i, d in enumerate(dets, start=1):
                out.write(f"{i} {d}\n")
    else:
        if args.fetch:
            bfile = fetch_bfile(args.sequence, timeout=args.timeout)
        elif args.bfile:
            with open(args.bfile) as fh:
                bfile = parse_bfile(fh.read(), args.sequence)
        else:
            bfile = load_snapshot()
        result = oeis_compare(catbert_det_sequence(n), bfile)
        out.write(json.dumps(result) + "\n")
        status = 0 if result["full_match"] else 1
    return status


def cmd_bench(args, out):
    params = _params(args)
    records = run_bench(params, args.n_list, args.repetitions)
    if args.format == "json":
        out.write(records_to_json(records) + "\n")
    elif args.format == "csv":
        out.write(records_to_csv(records))
    else:
        out.write(format_table(records) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gencatalan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("seq", help="print generalized Catalan numbers g^(q/p)")
    _add_params(sp, n=False)
    sp.add_argument("--count", type=int, default=10)
    _add_format(sp)

    sp = sub.add_parser("hankel", help="print G(n)")
    _add_params(sp)
    _add_format(sp)

    sp = sub.add_parser("invert", help="print G(n)^-1 from the L^T M K factorization")
    _add_params(sp)
    sp.add_argument("--oracle", action="store_true", help="cross-check against elimination")
    sp.add_argument("--scaled", action="store_true", help="invert G(n)/q instead")
    _add_format(sp)

    sp = sub.add_parser("det", help="determinant of G(n)^-1")
    _add_params(sp)
    sp.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    sp.add_argument("--scaled", action="store_true", help="use G(n)/q")
    _add_format(sp)

    sp = sub.add_parser("verify", help="run identity suites")
    sp.add_argument("--suite", action="append", choices=list(SUITES))
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--p-list", type=_int_list, default=list(GRID_P))
    sp.add_argument("--q-list", type=_int_list, default=list(GRID_Q))
    sp.add_argument("--a-list", type=_int_list, default=list(GRID_A))
    sp.add_argument("--n-max", type=int, default=None, help="override each suite's default size")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.add_argument("--format", choices=("plain", "json"), default="plain")

    sp = sub.add_parser("catbert", help="reciprocal-Catalan Hankel matrix")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--show", choices=("matrix", "inverse", "dets", "oeis"), default="inverse")
    sp.add_argument("--bfile", help="local b-file to compare against (default: bundled snapshot)")
    sp.add_argument("--fetch", action="store_true", help="download the live b-file instead")
    sp.add_argument("--timeout", type=float, default=10.0)
    sp.add_argument("--sequence", default=SEQUENCE_ID)
    _add_format(sp)

    sp = sub.add_parser("bench", help="factorized vs elimination timing")
    _add_params(sp, n=False)
    sp.add_argument("--n-list", type=_int_list, default=[8, 16, 24, 32])
    sp.add_argument("--repetitions", type=int, default=3)
    _add_format(sp)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "seq":
            return cmd_seq(args, out)
        if args.command == "hankel":
            return cmd_hankel(args, out)
        if args.command == "invert":
            return cmd_invert(args, out, err)
        if args.command == "det":
            return cmd_det(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        if args.command == "catbert":
            return cmd_catbert(args, out, err)
        if args.command == "bench":
            return cmd_bench(args, out)
    except UsageError as exc:
        err.write(f"gencatalan {args.command}: error: {exc}\n")
        return 2
    return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
