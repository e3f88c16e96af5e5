"""Command-line interface: ``sp9grid {lemmas,color,verify,oracle,export}``.

Exit codes: 0 success, 1 usage or I/O error, 2 negative verdict.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .colorist import ColoringError, InvariantError, color_grid, coloring_from_mapping, parse_coloring, \
    serialize_coloring, verify_homomorphism
from .oracle import OracleError, exhaustive_signature_sweep, find_homomorphism, load_target
from .signed_grid import GridError, make_grid, parse_grid, random_signature
from .signed_paley import sp9, to_dot
from .structure_checks import all_passed, check_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _probability(text):
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text}")
    return p


def _grid_from_args(args):
    """Build the grid from --grid, or --rows/--cols with an optional random signature."""
    if args.grid is not None:
        if args.neg_prob is not None or args.seed is not None:
            raise UsageError("give either --grid or --neg-prob/--seed, not both")
        g = parse_grid(_read(args.grid))
        if (args.rows, args.cols) != (None, None) and (args.rows, args.cols) != (g.rows, g.cols):
            raise UsageError(f"--rows/--cols disagree with {args.grid} ({g.rows}x{g.cols})")
        return g
    if args.rows is None or args.cols is None:
        raise UsageError("--rows and --cols are required without --grid")
    if args.neg_prob is None:
        if args.seed is not None:
            raise UsageError("--seed needs --neg-prob")
        return make_grid(args.rows, args.cols)
    return random_signature(args.rows, args.cols, args.neg_prob, args.seed if args.seed is not None else 0)


def cmd_lemmas(args) -> int:
    reports = check_all(slow_lemma1=args.slow_l1)
    for r in reports:
        print(r)
    ok = all_passed(reports)
    print("all checks passed" if ok else "SOME CHECKS FAILED")
    if args.report:
        doc = {"all_pass": ok, "lemmas": [r.to_dict() for r in reports]}
        _write(args.report, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_color(args) -> int:
    g = _grid_from_args(args)
    try:
        col = color_grid(g)
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    verdict = verify_homomorphism(g, col)
    if not verdict.ok:
        for v in verdict.violations:
            print(v, file=sys.stderr)
        return EXIT_NEGATIVE
    _write(args.out, serialize_coloring(col))
    if args.out not in (None, "-"):
        print(f"wrote verified {g.rows}x{g.cols} coloring to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_grid(_read(args.grid))
    col = parse_coloring(_read(args.coloring))
    verdict = verify_homomorphism(g, col)
    if verdict.ok:
        print(f"OK: {g.num_edges} edges verified")
        return EXIT_OK
    for v in verdict.violations:
        print(v)
    print(f"FAILED: {len(verdict.violations)} of {g.num_edges} edges violated")
    return EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    target = load_target(args.target)
    if args.sweep:
        if args.grid is not None:
            raise UsageError("--sweep takes --rows/--cols, not --grid")
        if args.rows is None or args.cols is None:
            raise UsageError("--sweep needs --rows and --cols")
        rep = exhaustive_signature_sweep(args.rows, args.cols, cross_check=True, target=target, workers=args.workers)
        print(f"colorist (SP9): {rep.total - len(rep.colorist_failures)}/{rep.total} verified")
        print(f"oracle ({args.target}): {rep.total - len(rep.oracle_failures)}/{rep.total} found")
        print(rep.summary())
        return EXIT_OK if rep.ok else EXIT_NEGATIVE
    g = _grid_from_args(args)
    mapping = find_homomorphism(g, target, max_vertices=args.max_vertices)
    if mapping is None:
        print("none exists")
        return EXIT_NEGATIVE
    for v, c in sorted(mapping.items()):
        print(f"({v.row},{v.col}) -> {target.labels[c]}")
    if target.order <= 9:
        assert verify_homomorphism(g, coloring_from_mapping(g, mapping), target).ok
    return EXIT_OK


def cmd_export(args) -> int:
    _write(args.out, to_dot(sp9(), positive_only=(args.what == "p9")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sp9grid", description="Signified grid colourings into the signed Paley graph SP9.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("lemmas", help="verify the structural lemmas about SP9")
    s.add_argument("--report", metavar="PATH", help="write a JSON report")
    s.add_argument("--slow-l1", action="store_true", help="also search all 9! permutations for lemma 1")
    s.set_defaults(func=cmd_lemmas)

    def grid_source(s):
        s.add_argument("--rows", type=int)
        s.add_argument("--cols", type=int)
        s.add_argument("--grid", metavar="FILE", help="grid file (JSON)")
        s.add_argument("--neg-prob", type=_probability, help="probability that an edge is negative")
        s.add_argument("--seed", type=int, help="seed for --neg-prob (default 0)")

    s = sub.add_parser("color", help="colour a grid into SP9")
    grid_source(s)
    s.add_argument("--out", metavar="FILE", help="coloring file to write (default stdout)")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", help="check a coloring against a grid")
    s.add_argument("--grid", metavar="FILE", required=True)
    s.add_argument("--coloring", metavar="FILE", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="brute-force homomorphism search")
    grid_source(s)
    s.add_argument("--target", default="paley:9", help="paley:Q or a target file (default paley:9)")
    s.add_argument("--sweep", action="store_true", help="check every signature of the rows x cols grid")
    s.add_argument("--max-vertices", type=int, default=25)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("export", help="export SP9 or P9 as DOT")
    s.add_argument("--what", choices=("sp9", "p9"), required=True)
    s.add_argument("--format", choices=("dot",), default="dot")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GridError, ColoringError, OracleError) as exc:
        print(f"sp9grid {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
