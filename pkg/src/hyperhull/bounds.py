"""Exact checks of the vertex-count bounds and the V(n) scan.

``V(n)`` counts the vertices of ``conv(H_n ∩ Z^2)``.  It must satisfy

    2 (n/D)^(1/3) - 2  <=  V  <=  C m^(1/3) (log2 m + 2),   m = max(n/D, 2D)

with ``C = (2^7 pi^2)^(1/3) ~ 10.810``.  Both sides are decided in exact
arithmetic: the lower bound by cubing, the upper bound after replacing ``C``
by ``541/50`` and ``log2 m`` by ``ceil(log2 m)``, which only enlarges the
right-hand side.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, TextIO

from .exactmath import Rat, ceil_log2, rat
from .hull import enumerate_hull
from .lattice import ZZ2

UPPER_CONSTANT = Fraction(541, 50)  # > (2^7 pi^2)^(1/3) = 10.8102...
OPTIMIZED_CONSTANT = 8.205  # best k ~ 13.140; reported only, never used for pass/fail
CSV_HEADER = ("n", "V", "lower_ok", "upper_ok")


class BoundViolation(ArithmeticError):
    def __init__(self, report: "BoundReport"):
        super().__init__(f"vertex-count bound violated at n={report.n}: V={report.v}, "
                         f"lower_ok={report.lower_ok}, upper_ok={report.upper_ok}")
        self.report = report
        self.n = report.n


@dataclass(frozen=True)
class BoundReport:
    n: int
    v: int
    lower_ok: bool
    upper_ok: bool
    m: Rat

    def csv_row(self) -> tuple:
        return (self.n, self.v, _flag(self.lower_ok), _flag(self.upper_ok))


def _flag(ok: bool) -> str:
    return "true" if ok else "false"


def bound_parameter(n: Rat, delta: int = 1) -> Rat:
    return rat(max(Fraction(n) / delta, 2 * delta))


def lower_bound_holds(v: int, n: Rat, delta: int = 1) -> bool:
    """``v >= 2 (n/delta)^(1/3) - 2``, i.e. ``(v + 2)^3 delta >= 8 n``."""
    return v + 2 >= 0 and (v + 2) ** 3 * delta >= 8 * n


def upper_bound_holds(v: int, n: Rat, delta: int = 1) -> bool:
    """``v <= C m^(1/3) (log2 m + 2)`` with a rational over-estimate of the right side."""
    if v <= 0:
        return True
    m = bound_parameter(n, delta)
    scale = UPPER_CONSTANT * (ceil_log2(m) + 2)
    # v <= scale * m^(1/3)  <=>  (v / scale)^3 <= m
    return (Fraction(v) / scale) ** 3 <= m


def count_vertices(n: int) -> int:
    return len(enumerate_hull(n, ZZ2))


def check(n: int, delta: int = 1) -> BoundReport:
    v = count_vertices(n)
    return BoundReport(n, v, lower_bound_holds(v, n, delta), upper_bound_holds(v, n, delta),
                       bound_parameter(n, delta))


def _check_range(bounds: tuple[int, int]) -> list[BoundReport]:
    lo, hi = bounds
    return [check(n) for n in range(lo, hi + 1)]


def scan(start: int, stop: int, sink: Optional[TextIO] = None, chunks: int = 1) -> Iterator[BoundReport]:
    """Yield one report per ``n`` in ``start..stop`` (inclusive), in order.

    Raises :class:`BoundViolation` on the first ``n`` failing either bound.
    With ``chunks > 1`` the range is split across worker processes; results
    are merged back in ascending ``n``.  If ``sink`` is given, CSV rows are
    written to it as they are produced.
    """
    if not 1 <= start <= stop:
        raise ValueError(f"scan needs 1 <= from <= to, got {start}..{stop}")
    writer = None
    if sink is not None:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CSV_HEADER)
    for report in _reports(start, stop, chunks):
        if writer is not None:
            writer.writerow(report.csv_row())
        if not (report.lower_ok and report.upper_ok):
            raise BoundViolation(report)
        yield report


def _reports(start: int, stop: int, chunks: int) -> Iterable[BoundReport]:
    if chunks <= 1:
        return (check(n) for n in range(start, stop + 1))
    import multiprocessing
    from itertools import chain

    step = max(1, math.ceil((stop - start + 1) / (chunks * 8)))
    ranges = [(lo, min(lo + step - 1, stop)) for lo in range(start, stop + 1, step)]

    def gen():
        with multiprocessing.Pool(chunks) as pool:
            yield from chain.from_iterable(pool.imap(_check_range, ranges))

    return gen()


def write_csv(reports: Iterable[BoundReport], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow(r.csv_row())
