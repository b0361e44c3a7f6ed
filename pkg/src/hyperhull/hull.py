"""Vertex enumeration for ``conv(H_n ∩ (p + L))``.

``H_n`` is the closed region ``{x >= 0, y >= 0, x*y >= n}``.  Vertices are
produced left to right.  From a point ``p`` the next vertex lies in the
direction of the lattice vector of smallest slope leading back into ``H_n``;
that direction is found by narrowing a cone ``(inv, outv)`` of lattice
vectors with ray casts, which mirrors the steps of Euclid's algorithm.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional

from .exactmath import Rat, ceil_div, ceil_log2, floor_div, rat
from .instrument import active, checking_invariants
from .lattice import AffineLattice, Point, StdBasis, Vec, det2, reflect
from .raycast import INF, contains, raycast


class PreconditionError(ValueError):
    pass


def _column_bottom(n: Rat, q: Point, b2y: Rat) -> Point:
    """Lowest point of ``H_n`` on the lattice column through ``q`` (``q.x > 0``)."""
    qx, qy = q
    # ceil((n/qx - qy) / b2y) without forming n/qx
    k = ceil_div(n - qx * qy, qx * b2y)
    return (qx, qy + k * b2y)


def first_vertex(n: Rat, lat: AffineLattice) -> Point:
    """Bottommost point of ``H_n`` on the leftmost lattice column with ``x > 0``."""
    (b1x, b1y), (_, b2y) = lat.basis
    px, py = lat.anchor
    k = ceil_div(px, b1x) - 1
    q = (px - k * b1x, py - k * b1y)
    return _column_bottom(n, q, b2y)


def last_vertex(n: Rat, lat: AffineLattice) -> Point:
    """Leftmost point of ``H_n`` on the lowest lattice row with ``y > 0``."""
    x, y = first_vertex(n, reflect(lat))
    return (y, x)


def _check_search_basis(n, lat, p, inv, outv):
    px, py = p
    ok = (inv[0] > 0 and outv[0] >= 0
          and det2(inv, outv) == -lat.det
          and contains(n, (px + inv[0], py + inv[1]))
          and not contains(n, (px + outv[0], py + outv[1])))
    if not ok:
        raise AssertionError(f"search basis invariant broken: n={n} p={p} in={inv} out={outv}")


def _search_minsl(n: Rat, lat: AffineLattice, p: Point) -> tuple[Vec, int]:
    """Run the cone-narrowing loop from ``(b1, -b2)``; return (Minsl, iterations).

    Requires ``p ∈ H_n`` and ``p - b2 ∉ H_n``.
    """
    (b1x, b1y), (_, b2y) = lat.basis
    px, py = p
    inx, iny = b1x, b1y
    outx, outy = 0, -b2y
    check = checking_invariants()
    if check:
        _check_search_basis(n, lat, p, (inx, iny), (outx, outy))
    iterations = 0
    while True:
        iterations += 1
        o = raycast(n, (px + inx, py + iny), (outx, outy))
        inx += o * outx
        iny += o * outy
        i = raycast(n, (px + outx, py + outy), (inx, iny))
        if i == INF:
            break
        outx += i * inx
        outy += i * iny
        if check:
            _check_search_basis(n, lat, p, (inx, iny), (outx, outy))
    if check:
        _check_search_basis(n, lat, p, (inx, iny), (outx, outy))
    return (inx, iny), iterations


def iteration_budget_ok(iterations: int, n: Rat, det: Rat) -> bool:
    """Exact test of ``iterations <= 3*log2(n + det + 2) + 12``."""
    e = iterations - 12
    if e <= 0:
        return True
    # 2**(e/3) <= X  <=>  2**e <= X**3
    return 2 ** e <= Fraction(n + det + 2) ** 3


def _record(n, lat, p, iterations):
    c = active()
    if c is None:
        return
    c.nextpt_calls += 1
    c.loop_iterations += iterations
    if iterations > c.max_loop_iterations:
        c.max_loop_iterations = iterations
    if lat.reduced and not (1 < p[1] < 2):
        c.budget_checked += 1
        if not iteration_budget_ok(iterations, n, lat.det):
            c.budget_violations.append((n, lat.det, p, iterations))


def _require_in_region(n, lat, p):
    if not contains(n, p):
        raise PreconditionError(f"{p} is not in H_{n}")
    if checking_invariants() and not lat.contains(p):
        raise PreconditionError(f"{p} is not a point of the affine lattice")


def nextpt(n: Rat, lat: AffineLattice, p: Point):
    """Farthest point of ``H_n ∩ (p + L)`` along ``p``'s minimal-slope direction.

    For a vertex ``p`` this is the next vertex.  Returns :data:`INF` when the
    ray in that direction never leaves ``H_n``.
    """
    _require_in_region(n, lat, p)
    b2y = lat.basis.b2[1]
    px, py = p
    if contains(n, (px, py - b2y)):
        m = raycast(n, p, (0, -b2y))
        _record(n, lat, p, 0)
        return (px, py - m * b2y)
    direction, iterations = _search_minsl(n, lat, p)
    _record(n, lat, p, iterations)
    m = raycast(n, p, direction)
    if m == INF:
        return INF
    return (px + m * direction[0], py + m * direction[1])


def minsl(n: Rat, lat: AffineLattice, p: Point) -> Vec:
    """Primitive lattice vector of least slope from ``p`` back into ``H_n``."""
    _require_in_region(n, lat, p)
    b2y = lat.basis.b2[1]
    if contains(n, (p[0], p[1] - b2y)):
        return (0, -b2y)
    return _search_minsl(n, lat, p)[0]


def last_vertex_exception(n: Rat, lat: AffineLattice, p: Point) -> Point:
    """Next (and final) vertex after ``p`` when ``1 < p.y < 2`` on a reduced lattice.

    That vertex sits on the row ``y = p.y - 1``, at the least lattice ``x``
    that is ``>= max(p.x, n / (p.y - 1))``.
    """
    if not lat.reduced:
        raise PreconditionError("last_vertex_exception needs a reduced lattice")
    if not 1 < p[1] < 2:
        raise PreconditionError(f"p.y = {p[1]} is not in (1, 2)")
    _require_in_region(n, lat, p)
    # rows of a reduced lattice are one unit apart, so the row below p is the
    # lowest positive row and its leftmost point in H_n is the last vertex
    (c1x, c1y), (_, c2y) = lat.mirror_basis
    qy, qx = p
    q = _column_bottom(n, (qx - c1x, qy - c1y), c2y)
    last = (q[1], q[0])
    det = lat.det
    shift = ceil_div(max(p[0] - last[0], 0), det)
    return (last[0] + shift * det, last[1])


def iter_hull(n: Rat, lat: AffineLattice, start: Optional[Point] = None) -> Iterator[Point]:
    """Yield the vertices left to right, from ``start`` (a vertex) or the first one."""
    n = rat(n)
    q = first_vertex(n, lat) if start is None else start
    yield q
    use_exception = lat.reduced
    while True:
        if use_exception and 1 < q[1] < 2:
            yield last_vertex_exception(n, lat, q)
            return
        q = nextpt(n, lat, q)
        if q == INF:
            return
        yield q


def enumerate_hull(n: Rat, lat: AffineLattice) -> list[Point]:
    """All vertices of ``conv(H_n ∩ (anchor + L))`` ordered by increasing x."""
    n = rat(n)
    if lat.reduced:
        return list(iter_hull(n, lat))
    rn, rlat, sx, sy = to_reduced_frame(n, lat)
    return [(rat(x * sx), rat(y * sy)) for x, y in iter_hull(rn, rlat)]


def to_reduced_frame(n: Rat, lat: AffineLattice):
    """Rescale both axes so the lattice becomes a reduced sublattice of ``Z^2``.

    Returns ``(n', lat', sx, sy)``; a point ``(x, y)`` of the new frame maps
    back to ``(x*sx, y*sy)``.
    """
    (b1x, b1y), (_, b2y) = lat.basis
    sx, sy = b1x, lat.row_step
    ax, ay = lat.anchor
    rlat = AffineLattice.from_basis((1, rat(Fraction(b1y) / sy)), (0, rat(Fraction(b2y) / sy)),
                                    (rat(Fraction(ax) / sx), rat(Fraction(ay) / sy)))
    return rat(Fraction(n) / (sx * sy)), rlat, sx, sy


def prev_vertex(n: Rat, lat: AffineLattice, q: Point):
    """Vertex preceding the vertex ``q``, or :data:`INF` when ``q`` is the first."""
    c = active()
    if c is not None:
        c.prev_calls += 1
    mirrored = (q[1], q[0])
    r = nextpt(n, AffineLattice(mirrored, lat.mirror_basis), mirrored)
    if r == INF:
        return INF
    return (r[1], r[0])


def column_from_x(n: Rat, lat: AffineLattice, x_start: Rat) -> Optional[Point]:
    """Bottom point of H on the first lattice column with ``x >= x_start``.

    ``None`` when that column is not at positive x.
    """
    (b1x, b1y), (_, b2y) = lat.basis
    px, py = lat.anchor
    k = floor_div(px - x_start, b1x)
    q = (px - k * b1x, py - k * b1y)
    if q[0] <= 0:
        return None
    return _column_bottom(n, q, b2y)


def landing_vertex(n: Rat, lat: AffineLattice, x_start: Rat):
    """A hull vertex with ``x >= x_start`` close to the first such one, or :data:`INF`.

    Starts at the bottom of the first column with ``x >= x_start`` and takes a
    fixed number of forward steps; the result is a genuine vertex and only a
    logarithmic number of vertices lie between it and the answer of
    :func:`next_vertex_from_x`.  ``lat`` must be reduced.
    """
    first = first_vertex(n, lat)
    p = column_from_x(n, lat, x_start)
    if p is None or p[0] <= first[0]:
        return first

    # after this many steps the walk has landed on genuine vertices
    steps = max(ceil_log2(n + lat.det), 0) + 1
    for _ in range(steps):
        if 1 < p[1] < 2:
            nxt = last_vertex_exception(n, lat, p)
        else:
            nxt = nextpt(n, lat, p)
        if nxt == INF:
            p = last_vertex(n, lat)
            break
        p = nxt
    return INF if p[0] < x_start else p


def next_vertex_from_x(n: Rat, lat: AffineLattice, x_start: Rat):
    """Vertex of least x among those with ``x >= x_start``, or :data:`INF`."""
    n, x_start = rat(n), rat(x_start)
    if not lat.reduced:
        rn, rlat, sx, sy = to_reduced_frame(n, lat)
        v = next_vertex_from_x(rn, rlat, Fraction(x_start) / sx)
        return v if v == INF else (rat(v[0] * sx), rat(v[1] * sy))

    p = landing_vertex(n, lat, x_start)
    if p == INF:
        return INF
    while True:
        back = prev_vertex(n, lat, p)
        if back == INF or back[0] < x_start:
            return p
        p = back
