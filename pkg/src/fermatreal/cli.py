"""Command line interface: a REPL, one-shot evaluation and self checks.

Exit codes: 0 success, 1 evaluation error, 2 syntax error, 3 failing
self-check suite.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import scalar
from .core import FermatReal
from .errors import ExprSyntaxError, FermatRealError, UnknownSuite
from .formatting import format_decomposition
from .parser import SessionState, evaluate
from .serialize import to_json
from .suites import run_suite

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_SYNTAX = 2
EXIT_SUITE = 3


def _build_argparser():
    ap = argparse.ArgumentParser(
        prog="fermatreal",
        description="Exact arithmetic with nilpotent infinitesimals",
    )
    ap.add_argument(
        "--precision",
        type=int,
        default=None,
        help="binary precision for inexact coefficients "
        "(default: FERMAT_PRECISION or 192)",
    )
    ap.add_argument(
        "--json",
        action="store_true",
        help="print results as JSON instead of decompositions",
    )
    ap.add_argument(
        "--rats-tol",
        type=str,
        default="1/1000000000",
        help="relative tolerance for rational reconstruction of inexact "
        "coefficients (default 1e-9)",
    )
    ap.add_argument(
        "--no-rats",
        action="store_true",
        help="print inexact coefficients as stored instead of reconstructing",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("repl", help="interactive session reading one statement per line")
    ev = sub.add_parser("eval", help="evaluate one expression and print the result")
    ev.add_argument("expression")
    ck = sub.add_parser("check", help="run a named self-check suite")
    ck.add_argument(
        "suite", help="core, metrics, powers, ideals, fractional, or all"
    )
    ck.add_argument("--cases", type=int, default=200)
    ck.add_argument("--seed", type=int, default=20260823)
    return ap


def _parse_tol(text: str) -> Fraction:
    try:
        if "e" in text or "E" in text:
            return Fraction(float(text))
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FermatRealError(f"invalid tolerance {text!r}") from None


def _render(value, args, tol) -> str:
    if isinstance(value, FermatReal):
        if args.json:
            return to_json(value)
        return format_decomposition(value, use_rats=not args.no_rats, tol=tol)
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value)


def _repl(args, tol) -> int:
    state = SessionState()
    interactive = sys.stdin.isatty()
    line_no = 0
    while True:
        if interactive:
            sys.stdout.write("> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            break
        line_no += 1
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if text in ("quit", "exit"):
            break
        try:
            value = evaluate(text, state, line=line_no)
        except ExprSyntaxError as exc:
            print(f"syntax error: {exc}")
            continue
        except FermatRealError as exc:
            print(f"error: {type(exc).__name__}: {exc}")
            continue
        print(_render(value, args, tol))
    return EXIT_OK


def _eval_once(args, tol) -> int:
    try:
        value = evaluate(args.expression, SessionState())
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except FermatRealError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    print(_render(value, args, tol))
    return EXIT_OK


def _check(args) -> int:
    try:
        reports = run_suite(args.suite, cases=args.cases, seed=args.seed)
    except UnknownSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    ok = True
    for report in reports:
        for line in report.lines():
            print(line)
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_SUITE


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    precision = args.precision
    if precision is None:
        env = os.environ.get("FERMAT_PRECISION")
        precision = int(env) if env else 192
    try:
        scalar.set_precision(precision)
        tol = _parse_tol(args.rats_tol)
    except FermatRealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    if args.command == "repl":
        return _repl(args, tol)
    if args.command == "eval":
        return _eval_once(args, tol)
    return _check(args)


if __name__ == "__main__":
    sys.exit(main())
