"""Command-line interface.

Exit codes: 0 ok, 2 parse error, 3 invariant violation, 4 usage (unknown
kind or action).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence, TextIO

from .bijections import TARGETS, convert
from .enumeration import count_by_sum, count_pasm, enumerate_pasm, orbit_report
from .grid import Dims
from .gyration import fpl_key, gyrate
from .io import KINDS, ParseError, UnknownKindError, dumps, loads
from .objects import InvariantError, validate
from .poset import OrderIdeal, enumerate_ideals, gyr, rowmotion
from .render import render_ascii, render_svg

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_USAGE = 0, 2, 3, 4
ACTIONS = ("row", "gyr", "gyration")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None


def _load_valid(text: str):
    try:
        obj = loads(text)
    except UnknownKindError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    verdict = validate(obj)
    if verdict.structural:
        raise CliError(EXIT_PARSE, verdict.structural)
    if not verdict.ok:
        raise CliError(EXIT_INVARIANT, "; ".join(str(v) for v in verdict.violations))
    return obj


def _dims(args) -> Dims:
    try:
        return Dims(args.m, args.n)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def cmd_convert(args, out: TextIO, stdin: TextIO) -> None:
    if args.to not in TARGETS:
        raise CliError(EXIT_USAGE, f"unknown kind {args.to!r}; expected one of {', '.join(TARGETS)}")
    obj = _load_valid(_read(args.input, stdin))
    if type(obj).__name__ == "PartialLinkPattern" and args.to != "link_pattern":
        raise CliError(EXIT_USAGE, "a link pattern cannot be converted to other kinds")
    try:
        result = convert(obj, args.to)
    except InvariantError as exc:
        raise CliError(EXIT_INVARIANT, str(exc)) from None
    out.write(dumps(result))


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> None:
    dims = _dims(args)
    if args.kind not in TARGETS:
        raise CliError(EXIT_USAGE, f"unknown kind {args.kind!r}")
    if args.by_sum:
        counts = count_by_sum(dims)
        out.write(",".join(str(counts[t]) for t in sorted(counts)) + "\n")
        return
    if args.count_only:
        out.write(f"{count_pasm(dims)}\n")
        return
    for M in enumerate_pasm(dims):
        out.write(dumps(M if args.kind == "pasm" else convert(M, args.kind, check=False)))


def _orbit_setup(dims: Dims, action: str):
    if action == "gyration":
        from .bijections import height_to_fpl, ideal_to_height

        carrier = [height_to_fpl(ideal_to_height(X)) for X in enumerate_ideals(dims)]
        return carrier, gyrate, fpl_key
    fn = rowmotion if action == "row" else gyr
    return enumerate_ideals(dims), fn, OrderIdeal.key


def cmd_orbits(args, out: TextIO, stdin: TextIO) -> None:
    if args.action not in ACTIONS:
        raise CliError(EXIT_USAGE, f"unknown action {args.action!r}; expected one of {', '.join(ACTIONS)}")
    if args.format not in ("csv", "json"):
        raise CliError(EXIT_USAGE, f"unknown format {args.format!r}")
    dims = _dims(args)
    carrier, fn, key = _orbit_setup(dims, args.action)
    report = orbit_report(carrier, fn, key)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["orbit_id", "size", "representative"])
        for k, (size, rep) in enumerate(report.orbits, start=1):
            w.writerow([k, size, rep])
        return
    doc = {
        "action": args.action,
        "m": dims.m,
        "n": dims.n,
        "carrier_size": report.carrier_size,
        "orbit_count": len(report),
        "order": report.order,
        "sizes": {str(s): c for s, c in sorted(report.sizes.items())},
        "orbits": [
            {"orbit_id": k, "size": size, "representative": rep}
            for k, (size, rep) in enumerate(report.orbits, start=1)
        ],
    }
    out.write(json.dumps(doc, sort_keys=True, indent=1) + "\n")


def cmd_render(args, out: TextIO, stdin: TextIO) -> None:
    if args.format not in ("ascii", "svg"):
        raise CliError(EXIT_USAGE, f"unknown format {args.format!r}")
    obj = _load_valid(_read(args.input, stdin))
    out.write(render_ascii(obj) if args.format == "ascii" else render_svg(obj))


def cmd_validate(args, out: TextIO, stdin: TextIO) -> None:
    _load_valid(_read(args.input, stdin))
    out.write("ok\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pasmkit", description="Partial alternating sign matrices and friends.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="convert an object to another family")
    c.add_argument("input", nargs="?", default="-", help="JSON envelope file, or - for stdin")
    c.add_argument("--to", required=True, help=f"target kind: {', '.join(TARGETS)}")
    c.set_defaults(func=cmd_convert)

    e = sub.add_parser("enumerate", help="list or count m x n objects")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--by-sum", action="store_true", help="print counts by total sum t = 0, 1, ...")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--kind", default="pasm", help="kind of object to stream (default pasm)")
    e.set_defaults(func=cmd_enumerate)

    o = sub.add_parser("orbits", help="orbit structure of rowmotion, Gyr or gyration")
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--action", required=True, help="row, gyr or gyration")
    o.add_argument("--format", default="json", help="csv or json")
    o.set_defaults(func=cmd_orbits)

    r = sub.add_parser("render", help="draw an object")
    r.add_argument("input", nargs="?", default="-")
    r.add_argument("--format", default="ascii", help="ascii or svg")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("validate", help="check an object's invariants")
    v.add_argument("input", nargs="?", default="-")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out, stdin)
    except CliError as exc:
        print(f"pasmkit: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
