"""Membership in the region above the hyperbola and lattice ray casts.

This is the only curve-specific surface of the enumeration code: the search
in :mod:`hyperhull.hull` only ever asks ``contains`` and ``raycast``.
"""
from __future__ import annotations

from .exactmath import DomainError, Rat, quad_roots_floor, root_floors
from .instrument import _active
from .lattice import Point, Vec

INF = float("inf")  # sentinel for "no crossing"; never used in arithmetic


def contains(n: Rat, pt: Point) -> bool:
    """Closed membership test for ``{x >= 0, y >= 0, x*y >= n}``."""
    x, y = pt
    return x >= 0 and y >= 0 and x * y >= n


def raycast(n: Rat, p: Point, v: Vec):
    """Least ``m >= 0`` where membership differs between ``p + m v`` and ``p + (m+1) v``.

    Returns :data:`INF` when membership never changes along the ray.

    Membership can only change across a root of
    ``f(m) = (px + m vx)(py + m vy) - n`` or a zero of one of the two
    coordinate functions, so it suffices to test the floors of those points
    and their neighbours.
    """
    px, py = p
    vx, vy = v
    if vx == 0 and vy == 0:
        raise DomainError("raycast direction must be non-zero")

    a, b, c = vx * vy, vx * py + vy * px, px * py - n
    if type(a) is int and type(b) is int and type(c) is int:
        events = list(root_floors(a, b, c))
    else:
        events = list(quad_roots_floor(a, b, c).floors)
    if vx:
        events.append((-px) // vx)
    if vy:
        events.append((-py) // vy)

    cand = {0}
    for r in events:
        if r >= -1:
            cand.update((r - 1, r, r + 1))

    result = INF
    evaluated = 0
    prev_m, prev_in = -2, False
    for m in sorted(cand):
        if m < 0:
            continue
        if m == prev_m + 1:
            here = prev_in
        else:
            x = px + m * vx
            y = py + m * vy
            here = x >= 0 and y >= 0 and x * y >= n
            evaluated += 1
        x = px + (m + 1) * vx
        y = py + (m + 1) * vy
        ahead = x >= 0 and y >= 0 and x * y >= n
        evaluated += 1
        if here != ahead:
            result = m
            break
        prev_m, prev_in = m, ahead

    c = _active.get()
    if c is not None:
        c.raycasts += 1
        c.quad_root_calls += 1
        c.contains_calls += evaluated
        if evaluated > c.max_raycast_contains:
            c.max_raycast_contains = evaluated
    return result
