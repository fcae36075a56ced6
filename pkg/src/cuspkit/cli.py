"""Command-line front end: ``cuspkit <command> [options]``.

Exit status is 0 when every check passed or was skipped, 1 when any check
failed and 2 for usage errors (including unwritable output paths).
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import parse_rational
from .report import (Report, class_section, codes_section, full_report, hesse_section, lattice_section,
                     lemma3_section)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} ({exc})") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cuspkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--timings", action="store_true", help="include elapsed seconds per check")
        p.add_argument("--table", action="store_true", help="print a summary table to stderr")

    p = sub.add_parser("verify-lattice", help="cusp lattice, E/F base change, membership, Euler numbers")
    p.add_argument("--p", type=_positive, default=9)
    common(p)

    p = sub.add_parser("lemma3", help="seeded determinant sweep over patterned 22x22 matrices")
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--inject-fault", action="store_true",
                   help="force a pattern-violating matrix through the determinant check")
    common(p)

    p = sub.add_parser("enumerate-codes", help="all maximal admissible ternary codes of length 9")
    p.add_argument("--reduce-symmetry", action="store_true",
                   help="search one orbit representative at a time (much faster)")
    common(p)

    p = sub.add_parser("verify-hesse", help="flexes, tangents, dual conic, optional dual sextic")
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(2))
    p.add_argument("--dual", action="store_true", help="also compute the dual sextic and its cusps")
    common(p)

    p = sub.add_parser("report", help="run every suite and write one report")
    p.add_argument("--out", required=True)
    p.add_argument("--p", type=_positive, default=9)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(2))
    p.add_argument("--full-search", action="store_true", help="enumerate codes without symmetry reduction")
    p.add_argument("--inject-fault", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--table", action="store_true")
    return parser


def _check_out_path(parser: argparse.ArgumentParser, path: str | None) -> None:
    if path is None:
        return
    parent = os.path.dirname(os.path.abspath(path))
    if os.path.isdir(path) or not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        parser.error(f"cannot write report to {path!r}")


def run(args: argparse.Namespace) -> Report:
    rep = Report()
    if args.command == "verify-lattice":
        rep.add_section("verify-lattice", lattice_section(args.p), {"p": args.p})
    elif args.command == "lemma3":
        rep.add_section("lemma3", lemma3_section(args.trials, args.seed, args.inject_fault),
                        {"trials": args.trials, "seed": args.seed, "inject_fault": args.inject_fault})
    elif args.command == "enumerate-codes":
        rep.add_section("enumerate-codes", codes_section(args.reduce_symmetry),
                        {"reduce_symmetry": args.reduce_symmetry})
    elif args.command == "verify-hesse":
        results = hesse_section(args.lam, args.dual)
        if args.dual:
            results += class_section()
        rep.add_section("verify-hesse", results, {"lambda": str(args.lam), "dual": args.dual})
    elif args.command == "report":
        rep = full_report(p=args.p, trials=args.trials, seed=args.seed, lam=args.lam,
                          reduce_symmetry=not args.full_search, inject_fault=args.inject_fault)
    return rep


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_out_path(parser, args.out)
    rep = run(args)
    text = rep.to_json(args.timings)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cuspkit: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    if args.table:
        print(rep.table(), file=sys.stderr)
    return 1 if rep.failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
