"""Command-line front end.

Subcommands: info, levels, collapse, admissible, decompose, verify-paper.
Levels are read and printed as exact fractions; output is a text table by
default or canonical JSON with --json.  Exit codes: 0 success, 1 check or
analysis failure, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import report as rep
from .conformal import collapse_check, admissibility, decomposition
from .errors import NotConformalError, ParseError, WalcError
from .liealg import Partition
from .verify import SECTIONS, run_checks
from .walgebra import Family, FamilyParams


class _LevelFriendlyParser(argparse.ArgumentParser):
    """ArgumentParser that accepts negative fractions like -15/4 as option values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _parse_level(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad level {text!r}: expected an exact fraction like -15/4") from exc


def _family_from_args(args) -> FamilyParams:
    if getattr(args, "hook", None) is not None:
        m, n = args.hook
        if m < 1 or n < 1:
            raise ParseError("--hook expects M >= 1 and N >= 1")
        return FamilyParams.hook(m, n)
    if getattr(args, "rect", None) is not None:
        q, m = args.rect
        if q < 2 or m < 2:
            raise ParseError("--rect expects Q >= 2 and M >= 2")
        return FamilyParams.rectangular(q, m)
    if getattr(args, "partition", None) is not None:
        return FamilyParams.from_partition(Partition.parse(args.partition))
    raise ParseError("specify a family with --hook M N, --rect Q M or --partition a,b,c")


def _add_family_flags(sub, partition=True):
    if partition:
        sub.add_argument("--partition", help="comma-separated partition, e.g. 3,1,1")
    sub.add_argument("--hook", nargs=2, type=int, metavar=("M", "N"), help="hook family (m, 1^n)")
    sub.add_argument("--rect", nargs=2, type=int, metavar=("Q", "M"), help="rectangular family (q^m)")


def _add_json_flag(sub):
    # also accepted after the subcommand; SUPPRESS keeps the global value intact
    sub.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)


def _emit(data: dict, text: str, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(rep.canonical_json(data))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _LevelFriendlyParser(
        prog="walc",
        description="Exact calculator for conformal and collapsing levels of "
        "affine W-algebras of type A",
    )
    parser.add_argument("--json", action="store_true", help="emit canonical JSON")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_LevelFriendlyParser)

    p_info = subs.add_parser("info", help="grading, dimensions, generators and central charge")
    p_info.add_argument("--partition", required=True, help="comma-separated partition")
    _add_json_flag(p_info)

    p_levels = subs.add_parser("levels", help="solve for all conformal levels")
    _add_family_flags(p_levels)
    _add_json_flag(p_levels)

    p_collapse = subs.add_parser("collapse", help="strongly-collapsing verdict at a level")
    _add_family_flags(p_collapse)
    p_collapse.add_argument("--level", required=True, help="exact level, e.g. -15/4")
    _add_json_flag(p_collapse)

    p_adm = subs.add_parser("admissible", help="admissibility of a level")
    _add_family_flags(p_adm)
    p_adm.add_argument("--level", required=True, help="exact level, e.g. -15/4")
    _add_json_flag(p_adm)

    p_dec = subs.add_parser("decompose", help="charge-sector decomposition at H1/H2")
    _add_family_flags(p_dec)
    p_dec.add_argument("--case", type=int, choices=(1, 2), required=True)
    p_dec.add_argument("--range", type=int, default=2, dest="charge_range", metavar="R")
    _add_json_flag(p_dec)

    p_ver = subs.add_parser("verify-paper", help="run the full reproduction sweep")
    p_ver.add_argument("--only", choices=SECTIONS, help="run a single section")
    _add_json_flag(p_ver)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "info":
            data = rep.info_report(Partition.parse(args.partition))
            _emit(data, rep.info_text(data), args.json)
            return 0
        if args.command == "levels":
            fp = _family_from_args(args)
            data = rep.levels_report(fp)
            _emit(data, rep.levels_text(data), args.json)
            return 0
        if args.command == "collapse":
            fp = _family_from_args(args)
            k = _parse_level(args.level)
            try:
                verdict = collapse_check(fp, k)
            except NotConformalError as exc:
                data = {
                    "query": {"command": "collapse", "family": fp.describe(), "level": k},
                    "error": "not-conformal",
                    "w_central_charge": exc.w_charge,
                    "coset_central_charge": exc.coset_charge,
                }
                _emit(
                    data,
                    f"k = {k} is not a conformal level: W-algebra central charge "
                    f"{exc.w_charge} != coset central charge {exc.coset_charge}",
                    args.json,
                )
                return 1
            data = rep.collapse_report(verdict)
            _emit(data, rep.collapse_text(data), args.json)
            return 0
        if args.command == "admissible":
            fp = _family_from_args(args)
            k = _parse_level(args.level)
            form = admissibility(fp, k)
            data = rep.admissible_report(fp, k, form)
            _emit(data, rep.admissible_text(data), args.json)
            return 0
        if args.command == "decompose":
            fp = _family_from_args(args)
            result = decomposition(fp, args.case, args.charge_range)
            data = rep.decompose_report(result)
            _emit(data, rep.decompose_text(data), args.json)
            return 0
        if args.command == "verify-paper":
            results = run_checks(args.only)
            data = rep.verify_report(results)
            _emit(data, rep.verify_text(data), args.json)
            return 0 if data["all_passed"] else 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    raise SystemExit(main())
