"""Command line front end: ``nptp approx|quad|nodes|rule|resolve|bench``."""
from __future__ import annotations

import argparse
import csv
import logging
import sys

from .approx import nptp_nodes
from .bench import BenchSpec, run_bench, run_suite
from .exceptions import ExpressionError, FunctionNotFoundError, NptpError, NumericalFailure
from .expression import Expression
from .functions import resolve_function
from .mapping import SineMap
from .params import DEFAULT_SEED, fixed_p
from .quadrature import integrate, nptp_quad_rule
from .resolution import resolution_coeffs

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


def _real(text):
    """Accept plain numbers or constant expressions such as ``pi/2``."""
    try:
        return float(text)
    except ValueError:
        pass
    try:
        expr = Expression(text)
    except ExpressionError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if "x" in text:
        raise argparse.ArgumentTypeError(f"{text!r} must not depend on x")
    return float(expr(0.0))


def _interval(text):
    try:
        a, b = (_real(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("interval must look like a,b")
    return a, b


def build_parser():
    parser = argparse.ArgumentParser(prog="nptp", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="approximate a function and report Er")
    p.add_argument("--fn", required=True, help="builtin name or expression in x")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("cheb", "nptp1", "nptp2"), default="nptp1")
    p.add_argument("--eps", type=_real, default=1e-15)
    p.add_argument("--interval", type=_interval, default=(-1.0, 1.0))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", choices=("csv", "json"), default="csv")

    p = sub.add_parser("quad", help="integrate a function over [-1, 1]")
    p.add_argument("--fn", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("legendre", "nptp"), default="nptp")
    p.add_argument("--eps", type=_real, default=1e-15)

    p = sub.add_parser("nodes", help="mapped interpolation nodes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_real, required=True)

    p = sub.add_parser("rule", help="mapped Gauss-Legendre rule")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=_real, required=True)
    p.add_argument("--out", choices=("csv", "json"), default="csv")

    p = sub.add_parser("resolve", help="coefficients of T_m(alpha y)")
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--max-m", type=int, required=True)

    p = sub.add_parser("bench", help="regenerate benchmark tables as CSV")
    p.add_argument("--suite", choices=("paper",), default="paper")
    p.add_argument("--out", default="bench_out", help="output directory")
    return parser


def _cmd_approx(args, out):
    methods = (args.method,)
    spec = BenchSpec(args.fn, methods, (args.n,), eps=args.eps,
                     interval=tuple(args.interval), seed=args.seed)
    report = run_bench(spec)
    row = report.rows[0]
    if row.error is not None:
        raise NumericalFailure(row.error)
    out.write(report.to_csv() if args.out == "csv" else report.to_json() + "\n")


def _cmd_quad(args, out):
    method = "legendre-quad" if args.method == "legendre" else "nptp-quad"
    f = resolve_function(args.fn)
    p = 0.0 if args.method == "legendre" else fixed_p(args.m, args.eps)
    value = integrate(nptp_quad_rule(args.m, SineMap(p)), f)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["function", "method", "m", "p", "integral", "abs_error"])
    err = "" if f.integral is None else f"{abs(value - f.integral):.17g}"
    writer.writerow([args.fn, method, args.m, f"{p:.17g}", f"{value:.17g}", err])


def _cmd_nodes(args, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "node"])
    for i, x in enumerate(nptp_nodes(args.n, SineMap(args.p))):
        writer.writerow([i, f"{x:.17g}"])


def _cmd_rule(args, out):
    rule = nptp_quad_rule(args.m, SineMap(args.p))
    out.write(rule.to_csv() if args.out == "csv" else rule.to_json() + "\n")


def _cmd_resolve(args, out):
    out.write(resolution_coeffs(args.alpha, args.max_m).to_csv())


def _cmd_bench(args, out):
    for path in run_suite(args.suite, args.out):
        out.write(f"{path}\n")


COMMANDS = {
    "approx": _cmd_approx,
    "quad": _cmd_quad,
    "nodes": _cmd_nodes,
    "rule": _cmd_rule,
    "resolve": _cmd_resolve,
    "bench": _cmd_bench,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        COMMANDS[args.command](args, out)
    except (ExpressionError, FunctionNotFoundError) as exc:
        print(f"nptp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"nptp: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except NptpError as exc:
        print(f"nptp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())


def main_entry():
    sys.exit(main())
