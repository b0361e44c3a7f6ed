"""Deterministic factorisation by walking the hull of ``H_n ∩ Z^2``.

Every lattice point of ``xy = n`` is a vertex, so the divisors ``d <= sqrt n``
are the x-coordinates of vertices ``(d, n/d)`` met while walking the hull up
to ``x = isqrt(n)``.  Only the current vertex is kept in memory.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactmath import floor_sqrt
from .hull import INF, column_from_x, iter_hull, nextpt
from .instrument import active, counting
from .lattice import ZZ2


@dataclass
class FactorOutcome:
    n: int
    divisors: list = field(default_factory=list)
    first_nontrivial: Optional[int] = None
    vertices_visited: int = 0
    nextpt_calls: int = 0


def divisors_via_hull(n: int) -> FactorOutcome:
    """All divisors of ``n``, read off the hull vertices with ``x <= isqrt(n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    root = floor_sqrt(n)
    small = []
    visited = 0
    with counting(counters=active()) as c:
        calls_before = c.nextpt_calls
        for x, y in iter_hull(n, ZZ2):
            if x > root:
                break
            visited += 1
            if x * y == n:
                small.append(x)
        calls = c.nextpt_calls - calls_before
    large = [n // d for d in reversed(small) if d * d != n]
    divs = small + large
    nontrivial = next((d for d in divs if 1 < d < n), None)
    return FactorOutcome(n, divs, nontrivial, visited, calls)


def _chunk_bounds(root: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, root))
    size, extra = divmod(root, chunks)
    out, lo = [], 1
    for i in range(chunks):
        hi = lo + size - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def _scan_chunk(n: int, lo: int, hi: int) -> Optional[int]:
    """Smallest divisor ``d`` with ``1 < d < n`` and ``lo <= d <= hi``, if any.

    Steps forward from the bottom of column ``lo``.  A step never jumps over
    a point of ``xy = n``: such a point would lie strictly inside a chord of
    the region, which strict convexity of the curve rules out.  So checking
    every point on the way finds every divisor of the interval, and after a
    logarithmic number of steps the walk is on consecutive hull vertices.
    """
    p = column_from_x(n, ZZ2, lo)
    while p != INF and p[0] <= hi:
        if p[0] * p[1] == n and 1 < p[0] < n:
            return p[0]
        p = nextpt(n, ZZ2, p)
    return None


def _scan_bounds(args: tuple[int, int, int]) -> Optional[int]:
    return _scan_chunk(*args)


def find_factor(n: int, chunks: int = 1, workers: int = 1) -> Optional[int]:
    """Smallest non-trivial divisor of ``n``, or ``None`` when ``n`` is prime.

    ``[1, isqrt(n)]`` is cut into ``chunks`` x-intervals, each walked
    independently from its left end (in ``workers`` processes if more than
    one).  Results are merged by minimum in chunk order, so the answer does
    not depend on ``chunks``.
    """
    if n < 2:
        raise ValueError("find_factor needs n >= 2")
    jobs = [(n, lo, hi) for lo, hi in _chunk_bounds(floor_sqrt(n), chunks)]
    if workers > 1 and len(jobs) > 1:
        import multiprocessing
        with multiprocessing.Pool(min(workers, len(jobs))) as pool:
            found = pool.map(_scan_bounds, jobs)
    else:
        found = [_scan_chunk(*job) for job in jobs]
    found = [d for d in found if d is not None]
    return min(found) if found else None
