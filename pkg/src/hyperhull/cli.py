"""Command-line interface.

    hyperhull vertices --n 14
    hyperhull vertices --n 6 --lattice 1,1,0,2 --format jsonl
    hyperhull vertices --n 14 --general 1,3,2,0,0 --branch-sample 10,10
    hyperhull count --n 4
    hyperhull scan --from 1 --to 100000 --out v.csv --chunks 4
    hyperhull factor --n 15
    hyperhull next --n 14 --from-x 4

Exit status: 0 on success, 1 on a domain error (bad hyperbola, bound
violation, ...), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterable, Optional, Sequence

from .bounds import BoundViolation, count_vertices, scan
from .exactmath import DomainError, format_rat, rat
from .factor import divisors_via_hull, find_factor
from .hull import INF, PreconditionError, enumerate_hull, next_vertex_from_x
from .lattice import ZZ2, AffineLattice
from .transform import Branch, GeneralHyperbola, map_back, to_standard


def _rational(text: str):
    try:
        return rat(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _rationals(count: int, what: str):
    def parse(text: str) -> tuple:
        parts = text.split(",")
        if len(parts) != count:
            raise argparse.ArgumentTypeError(f"{what} needs {count} comma-separated values")
        return tuple(_rational(p) for p in parts)
    parse.__name__ = what
    return parse


def _point_line(pt, fmt: str) -> str:
    x, y = format_rat(pt[0]), format_rat(pt[1])
    if fmt == "jsonl":
        return json.dumps({"x": x, "y": y})
    return f"{x},{y}"


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _write_points(pts: Iterable, fmt: str, path: Optional[str]) -> None:
    with _output(path) as fh:
        for pt in pts:
            fh.write(_point_line(pt, fmt) + "\n")


def _lattice(args) -> AffineLattice:
    anchor = args.anchor if args.anchor is not None else (0, 0)
    if args.lattice is None:
        return ZZ2 if anchor == (0, 0) else AffineLattice.from_basis((1, 0), (0, 1), anchor)
    w1x, w1y, w2x, w2y = args.lattice
    return AffineLattice.from_basis((w1x, w1y), (w2x, w2y), anchor)


def cmd_vertices(args, parser) -> int:
    if args.general is not None:
        if args.lattice is not None or args.anchor is not None:
            parser.error("--general cannot be combined with --lattice/--anchor")
        a, b, c, x0, y0 = args.general
        if not all(type(v) is int for v in (a, b, c)):
            parser.error("--general coefficients a,b,c must be integers")
        h = GeneralHyperbola(a, b, c, x0, y0, args.n)
        branch = Branch.positive() if args.branch_sample is None else Branch.containing(args.branch_sample)
        sp = to_standard(h, branch)
        pts = map_back(sp, enumerate_hull(sp.n_prime, sp.lat))
    else:
        if args.branch_sample is not None:
            parser.error("--branch-sample only applies with --general")
        if args.n <= 0:
            raise DomainError("n must be positive")
        pts = enumerate_hull(args.n, _lattice(args))
    _write_points(pts, args.format, args.out)
    return 0


def cmd_count(args, parser) -> int:
    if args.n < 1:
        raise DomainError("n must be at least 1")
    print(count_vertices(args.n))
    return 0


def cmd_scan(args, parser) -> int:
    if not 1 <= args.start <= args.stop:
        parser.error("scan needs 1 <= --from <= --to")
    with _output(args.out) as fh:
        for _ in scan(args.start, args.stop, fh, chunks=args.chunks):
            pass
    return 0


def cmd_factor(args, parser) -> int:
    n = args.n
    if n < 2:
        raise DomainError("factor needs n >= 2")
    if args.divisors:
        print(" ".join(str(d) for d in divisors_via_hull(n).divisors))
        return 0
    d = find_factor(n, args.chunks, args.workers)
    if d is None:
        print(f"{n} is prime")
    else:
        print(f"{n} = {d} * {n // d}")
    return 0


def cmd_next(args, parser) -> int:
    if args.n <= 0:
        raise DomainError("n must be positive")
    v = next_vertex_from_x(args.n, _lattice(args), args.from_x)
    print("inf" if v == INF else _point_line(v, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperhull",
        description="Convex hull vertices of lattice points above a hyperbola.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def lattice_opts(p):
        p.add_argument("--lattice", type=_rationals(4, "lattice"), metavar="w1x,w1y,w2x,w2y",
                       help="basis of the lattice (default: Z^2)")
        p.add_argument("--anchor", type=_rationals(2, "anchor"), metavar="px,py",
                       help="translation of the lattice (default: 0,0)")

    p = sub.add_parser("vertices", help="list the hull vertices left to right")
    p.add_argument("--n", type=_rational, required=True)
    lattice_opts(p)
    p.add_argument("--general", type=_rationals(5, "general"), metavar="a,b,c,x0,y0",
                   help="a(x-x0)^2 + b(x-x0)(y-y0) + c(y-y0)^2 = n instead of xy = n")
    p.add_argument("--branch-sample", type=_rationals(2, "branch-sample"), metavar="px,py",
                   help="point inside the wanted component (default: both factors positive)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("count", help="number of hull vertices V(n) over Z^2")
    p.add_argument("--n", type=_integer, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("scan", help="V(n) and bound checks for a range of n, as CSV")
    p.add_argument("--from", dest="start", type=_integer, required=True)
    p.add_argument("--to", dest="stop", type=_integer, required=True)
    p.add_argument("--out", help="CSV file (default: stdout)")
    p.add_argument("--chunks", type=_integer, default=1, help="worker processes")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("factor", help="smallest non-trivial divisor by walking the hull")
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--chunks", type=_integer, default=1, help="independent x-intervals")
    p.add_argument("--workers", type=_integer, default=1, help="processes for the chunks")
    p.add_argument("--divisors", action="store_true", help="print every divisor instead")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("next", help="first vertex with x >= FROM_X, or inf")
    p.add_argument("--n", type=_rational, required=True)
    p.add_argument("--from-x", dest="from_x", type=_rational, required=True)
    lattice_opts(p)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_next)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "chunks", 1) < 1 or getattr(args, "workers", 1) < 1:
            parser.error("--chunks and --workers must be at least 1")
        return args.func(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
