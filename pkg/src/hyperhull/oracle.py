"""Brute-force ground truth, for desk-scale inputs only.

Nothing here touches :mod:`hyperhull.hull` or :mod:`hyperhull.raycast`; the
hull is rebuilt from scratch as the lower convex chain of the per-column
minima of ``H_n`` on the lattice.
"""
from __future__ import annotations

from fractions import Fraction

from .exactmath import Rat, ceil_div, floor_div, rat
from .lattice import AffineLattice, Point

MAX_COLUMNS = 10 ** 7


class OracleTooLarge(ValueError):
    pass


def _in_region(n, x, y):
    return x >= 0 and y >= 0 and x * y >= n


def _lowest_row(lat: AffineLattice) -> Rat:
    step = lat.row_step
    y = lat.anchor[1] - floor_div(lat.anchor[1], step) * step
    return y if y > 0 else step


def staircase(n: Rat, lat: AffineLattice, max_columns: int = MAX_COLUMNS) -> list[Point]:
    """Bottommost point of ``H_n`` on every lattice column ``0 < x <= x_max``.

    ``x_max`` is ``n / y_min + 1`` (``y_min`` the lowest positive lattice
    row), extended if needed to reach the leftmost point of ``H_n`` on that
    row, so the whole vertex chain is covered.
    """
    n = rat(n)
    (b1x, b1y), (_, b2y) = lat.basis
    ax, ay = lat.anchor
    y_min = _lowest_row(lat)

    # leftmost point of H_n on the lowest row, found by stepping along the row
    k0 = floor_div(ax, b1x)
    x0, y0 = ax - k0 * b1x, ay - k0 * b1y
    if x0 <= 0:
        x0, y0 = x0 + b1x, y0 + b1y

    period = lat.row_period
    x_row = None
    xs = x0
    # column x = x0 + j*b1x holds the row y_min iff (y_min - y(column)) is a multiple of b2y
    for j in range(floor_div(period, b1x) + 1):
        yc = y0 + j * b1y
        if Fraction(y_min - yc) / b2y == floor_div(y_min - yc, b2y):
            x_row = x0 + j * b1x
            break
    x_row = x_row + ceil_div(max(Fraction(n) / y_min - x_row, 0), period) * period
    x_max = max(Fraction(n) / y_min + 1, x_row)

    count = floor_div(x_max - x0, b1x) + 1
    if count > max_columns:
        raise OracleTooLarge(f"{count} columns exceeds the oracle cap {max_columns}")

    out = []
    for j in range(count):
        x = x0 + j * b1x
        y = y0 + j * b1y
        # smallest y on the column with x*y >= n; exact for ints and Fractions
        y = y + ceil_div(n - x * y, x * b2y) * b2y
        while not _in_region(n, x, y):
            y += b2y
        while _in_region(n, x, y - b2y):
            y -= b2y
        out.append((rat(x), rat(y)))
    return out


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_hull(stairs: list[Point]) -> list[Point]:
    """Strict lower convex chain of the staircase, cut at the lowest-row vertex."""
    if not stairs:
        raise ValueError("empty staircase")
    pts = sorted(stairs)
    chain: list[Point] = []
    for p in pts:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    y_min = min(p[1] for p in pts)
    last = min(p for p in pts if p[1] == y_min)
    return chain[: chain.index(last) + 1]


def brute_hull_points(n: Rat, lat: AffineLattice) -> list[Point]:
    return brute_hull(staircase(n, lat))


def naive_raycast(n: Rat, p: Point, v, budget: int):
    """Scan ``m = 0..budget`` for the first membership flip; ``None`` if none."""
    inside = _in_region(n, p[0], p[1])
    for m in range(budget + 1):
        nxt = _in_region(n, p[0] + (m + 1) * v[0], p[1] + (m + 1) * v[1])
        if nxt != inside:
            return m
        inside = nxt
    return None


def trial_divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
