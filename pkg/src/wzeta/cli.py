"""Command-line interface.

Subcommands: list, digits, verify, accelerate, rate, eval. Output is
deterministic: exact rationals print as "p/q", decimals are truncated
strings, and nothing timing-dependent goes to standard output. Exit
codes: 0 success, 1 a verification ran and failed, 2 bad input
(parse/option/domain errors, one-line diagnostic on standard error).
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as catalog_mod
from . import dsl, precision, wz
from .errors import WZetaError

_COMPARE_DECIMALS = 30
_COMPARE_LHS_TERMS = 300


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wzeta",
        description="Exact verification and certified high-precision "
        "summation of fast zeta(3) series.",
    )
    parser.add_argument(
        "--catalog",
        metavar="PATH",
        help="use a replacement catalog definition file",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog entries")

    p_digits = sub.add_parser("digits", help="sum a series to certified digits")
    p_digits.add_argument("--series", required=True, help="series name (e.g. s2)")
    p_digits.add_argument("--digits", required=True, type=int, metavar="D")
    p_digits.add_argument(
        "--mode", choices=(precision.EXACT, precision.SCALED), default=precision.EXACT
    )

    p_verify = sub.add_parser("verify", help="check the pair identity")
    p_verify.add_argument("--pair", required=True, help="pair name (s1 or s2)")
    p_verify.add_argument("--nmax", type=int, default=30, metavar="N")
    p_verify.add_argument(
        "--symbolic",
        action="store_true",
        help="prove via degree-bounded identity testing instead of a grid",
    )

    p_accel = sub.add_parser(
        "accelerate", help="print the diagonal series of a pair"
    )
    p_accel.add_argument("--pair", required=True)
    p_accel.add_argument("--terms", required=True, type=int, metavar="T")

    p_rate = sub.add_parser("rate", help="measure decimal digits gained per term")
    p_rate.add_argument("--series", required=True)
    p_rate.add_argument("--lo", required=True, type=int)
    p_rate.add_argument("--hi", required=True, type=int)

    p_eval = sub.add_parser("eval", help="evaluate a term expression exactly")
    p_eval.add_argument("--expr", required=True, metavar="TEXT")
    p_eval.add_argument("--n", required=True, type=int)
    p_eval.add_argument("--k", type=int, default=0)

    return parser


def _cmd_list(cat) -> int:
    for name, kind, start, rate in cat.listing():
        rate_text = "-" if rate is None else f"{rate:.3f}"
        print(f"{name} {kind} {start} {rate_text}")
    return 0


def _cmd_digits(cat, args) -> int:
    series = cat.series_by_name(args.series)
    report = precision.sum_to_digits(series, args.digits, mode=args.mode)
    print(report.serialize())
    return 0


def _cmd_verify(cat, args) -> int:
    pair = cat.pair_by_name(args.pair)
    if args.symbolic:
        report = wz.verify_symbolic(pair)
    else:
        report = wz.verify_grid(pair, args.nmax)
    print(report.serialize())
    print("PASS" if report.outcome == "pass" else "FAIL")
    return 0 if report.outcome == "pass" else 1


def _cmd_accelerate(cat, args) -> int:
    if args.terms < 1:
        raise WZetaError("--terms must be at least 1")
    pair = cat.pair_by_name(args.pair)
    series = wz.accelerate(pair)
    for position, (n, value) in enumerate(series.terms()):
        if position >= args.terms:
            break
        print(f"{n} {value}")
    gap, bound = wz.two_sided_gap(
        pair, lhs_count=_COMPARE_LHS_TERMS, accel_count=args.terms
    )
    status = "ok" if gap <= bound else "fail"
    print(
        f"lhs_terms={_COMPARE_LHS_TERMS} "
        f"gap={precision.truncated_decimal(gap, _COMPARE_DECIMALS)} "
        f"bound={precision.truncated_decimal(bound, _COMPARE_DECIMALS)} "
        f"status={status}"
    )
    return 0 if status == "ok" else 1


def _cmd_rate(cat, args) -> int:
    series = cat.series_by_name(args.series)
    rate = precision.measure_rate(series, args.lo, args.hi)
    print(f"{rate:.3f}")
    return 0


def _cmd_eval(args) -> int:
    term = dsl.parse_term(args.expr)
    print(term.value_at(args.n, args.k))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        cat = catalog_mod.load_catalog(args.catalog)
        if args.command == "list":
            return _cmd_list(cat)
        if args.command == "digits":
            return _cmd_digits(cat, args)
        if args.command == "verify":
            return _cmd_verify(cat, args)
        if args.command == "accelerate":
            return _cmd_accelerate(cat, args)
        if args.command == "rate":
            return _cmd_rate(cat, args)
        raise WZetaError(f"unhandled command {args.command!r}")
    except WZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
