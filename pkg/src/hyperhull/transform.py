"""Reduction of a general rational hyperbola to ``{xy = n'}`` over a sublattice.

For ``a(x-x0)^2 + b(x-x0)(y-y0) + c(y-y0)^2 = n`` with integer ``a, b, c``
and square discriminant ``Delta^2 = b^2 - 4ac``, the quadratic form factors
over the integers as ``(a1 X + c2 Y)(a2 X + c1 Y)``.  The two linear factors
become the new coordinates; the image of ``Z^2`` is then an affine sublattice
of ``Z^2`` of determinant ``Delta``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import DomainError, Rat, floor_sqrt, rat, sign
from .lattice import AffineLattice, Point


class NotRationalHyperbola(DomainError):
    pass


class DegenerateConic(DomainError):
    pass


class BranchError(DomainError):
    pass


@dataclass(frozen=True)
class GeneralHyperbola:
    a: int
    b: int
    c: int
    x0: Rat = 0
    y0: Rat = 0
    n: Rat = 1

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if not isinstance(getattr(self, name), int):
                raise DomainError(f"coefficient {name} must be an integer")
        object.__setattr__(self, "x0", rat(self.x0))
        object.__setattr__(self, "y0", rat(self.y0))
        object.__setattr__(self, "n", rat(self.n))
        if self.n == 0:
            raise DegenerateConic("n = 0 gives a pair of lines, not a hyperbola")
        d2 = self.b * self.b - 4 * self.a * self.c
        if d2 <= 0:
            raise NotRationalHyperbola(f"b^2 - 4ac = {d2} is not positive")
        if floor_sqrt(d2) ** 2 != d2:
            raise NotRationalHyperbola(f"b^2 - 4ac = {d2} is not a perfect square")

    @property
    def delta(self) -> int:
        return floor_sqrt(self.b * self.b - 4 * self.a * self.c)

    @property
    def content(self) -> int:
        return math.gcd(self.a, self.b, self.c)

    def form(self, pt: Point) -> Rat:
        """Value of the quadratic form at ``pt - (x0, y0)``."""
        x, y = pt[0] - self.x0, pt[1] - self.y0
        return rat(self.a * x * x + self.b * x * y + self.c * y * y)


@dataclass(frozen=True)
class AffineMap:
    """``pt -> M pt + t`` with exact rational entries."""

    m11: Rat
    m12: Rat
    m21: Rat
    m22: Rat
    t: Point = (0, 0)
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.det == 0:
            raise DomainError("affine map is not invertible")

    @property
    def det(self) -> Rat:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, pt: Point) -> Point:
        x, y = pt
        return (rat(self.m11 * x + self.m12 * y + self.t[0]),
                rat(self.m21 * x + self.m22 * y + self.t[1]))

    def inverse(self) -> "AffineMap":
        d = Fraction(self.det)
        i11, i12 = rat(self.m22 / d), rat(-self.m12 / d)
        i21, i22 = rat(-self.m21 / d), rat(self.m11 / d)
        tx, ty = self.t
        return AffineMap(i11, i12, i21, i22,
                         (rat(-(i11 * tx + i12 * ty)), rat(-(i21 * tx + i22 * ty))))


@dataclass(frozen=True)
class Branch:
    """Which convex component of the complement of the hyperbola to use.

    Either a rational ``sample`` point strictly inside the component, or the
    ``signs`` of the two linear factors of the form on that component.
    """

    sample: Optional[Point] = None
    signs: Optional[tuple] = None

    @classmethod
    def positive(cls) -> "Branch":
        return cls(signs=(1, 1))

    @classmethod
    def containing(cls, pt: Sequence) -> "Branch":
        return cls(sample=(rat(pt[0]), rat(pt[1])))


@dataclass(frozen=True)
class StandardProblem:
    n_prime: Rat
    lat: AffineLattice
    forward: AffineMap  # original coordinates -> standard coordinates
    back: AffineMap  # standard coordinates -> original coordinates
    quadrant_flips: tuple
    source: GeneralHyperbola


def factor_form(a: int, b: int, c: int, delta: int) -> tuple[int, int, int, int]:
    """Integers ``(a1, a2, c1, c2)`` with ``aX^2+bXY+cY^2 = (a1 X + c2 Y)(a2 X + c1 Y)``.

    ``a1 c1 = (b - delta)/2`` and ``a2 c2 = (b + delta)/2``.
    """
    if a != 0 and c != 0:
        half_minus = (b - delta) // 2
        a1 = math.gcd(a, half_minus)
        c1 = half_minus // a1
        a2 = a // a1
        c2 = c // c1
    elif c == 0:
        # aX^2 + bXY = X (aX + bY); requires b = delta > 0
        a1, c2, a2, c1 = 1, 0, a, b
    else:
        # bXY + cY^2 = (bX + cY) Y
        a1, c2, a2, c1 = b, c, 0, 1
    return a1, a2, c1, c2


def to_standard(h: GeneralHyperbola, branch: Branch = Branch.positive()) -> StandardProblem:
    """Map ``h`` and ``Z^2`` to ``{xy = |n|}`` and an affine sublattice of ``Z^2``.

    The selected convex component lands in the positive quadrant.
    """
    a, b, c, n = h.a, h.b, h.c, h.n
    delta = h.delta
    if a * c == 0 and b < 0:
        # the one-sided factorisations divide by b; normalise its sign
        a, b, c, n = -a, -b, -c, -n
    a1, a2, c1, c2 = factor_form(a, b, c, delta)
    # u1 = a1 X + c2 Y, u2 = a2 X + c1 Y with (X, Y) = (x - x0, y - y0)
    if branch.sample is not None:
        u = (a1 * (branch.sample[0] - h.x0) + c2 * (branch.sample[1] - h.y0),
             a2 * (branch.sample[0] - h.x0) + c1 * (branch.sample[1] - h.y0))
        q = u[0] * u[1]
        if sign(n) * (q - n) <= 0:
            raise BranchError(f"{branch.sample} is not strictly inside a convex component")
        flips = (sign(u[0]), sign(u[1]))
    elif branch.signs is not None:
        flips = tuple(int(s) for s in branch.signs)
        if any(s not in (1, -1) for s in flips) or flips[0] * flips[1] != sign(n):
            raise BranchError(f"signs {branch.signs} do not select a component for n = {n}")
    else:
        raise BranchError("branch needs a sample point or factor signs")

    f1, f2 = flips
    m11, m12, m21, m22 = f1 * a1, f1 * c2, f2 * a2, f2 * c1
    if abs(m11 * m22 - m12 * m21) != delta:
        raise AssertionError("transformed lattice does not have determinant delta")
    shift = (-(m11 * h.x0 + m12 * h.y0), -(m21 * h.x0 + m22 * h.y0))
    meta = {"a1": a1, "a2": a2, "c1": c1, "c2": c2, "delta": delta}
    forward = AffineMap(m11, m12, m21, m22, (rat(shift[0]), rat(shift[1])), meta)
    lat = AffineLattice.from_basis((m11, m21), (m12, m22), forward.t)
    return StandardProblem(rat(abs(n)), lat, forward, forward.inverse(), flips, h)


def map_back(sp: StandardProblem, pts) -> list[Point]:
    """Images in original coordinates of standard-coordinate lattice points."""
    out = []
    for pt in pts:
        if not sp.lat.contains(pt):
            raise DomainError(f"{pt} is not a point of the standard lattice")
        q = sp.back(pt)
        if not all(isinstance(v, int) for v in q):
            raise AssertionError(f"{pt} maps to non-integer point {q}")
        out.append(q)
    return out
