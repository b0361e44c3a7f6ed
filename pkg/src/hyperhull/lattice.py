"""Rational lattices in the plane and their standard bases.

Vectors and points are plain ``(x, y)`` tuples of exact scalars.  A lattice
is always stored through its standard basis ``b1 = (b1x, b1y)``,
``b2 = (0, b2y)`` with ``b1x > 0``, ``b2y > 0`` and ``0 <= b1y < b2y``; that
basis is unique, so two lattices are equal exactly when their standard bases
are.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .exactmath import DomainError, Rat, floor_div, rat, rat_bezout, rat_gcd, rat_mod

Vec = tuple  # (x, y) of Rat; a displacement
Point = tuple  # (x, y) of Rat; a location


def vec(x, y) -> Vec:
    return (rat(x), rat(y))


def det2(u: Vec, v: Vec) -> Rat:
    return u[0] * v[1] - u[1] * v[0]


class StdBasis(NamedTuple):
    b1: Vec
    b2: Vec

    @property
    def det(self) -> Rat:
        return self.b1[0] * self.b2[1]


def det_lattice(w1: Vec, w2: Vec) -> Rat:
    """Covolume of the lattice spanned by ``w1, w2`` (always positive)."""
    d = abs(det2(w1, w2))
    if d == 0:
        raise DomainError(f"degenerate basis {w1}, {w2}")
    return d


def standard_basis(w1: Vec, w2: Vec) -> StdBasis:
    """Standard basis of the lattice spanned by ``w1`` and ``w2``.

    ``b1x`` is the generator of the x-projection, ``b2y = det / b1x``, and
    ``b1y`` comes from the Bezout combination realising ``b1x``, reduced into
    ``[0, b2y)``.
    """
    w1 = (rat(w1[0]), rat(w1[1]))
    w2 = (rat(w2[0]), rat(w2[1]))
    d = det_lattice(w1, w2)
    b1x, s, t = rat_bezout(w1[0], w2[0])
    b2y = d // b1x if type(d) is int and type(b1x) is int else rat(Fraction(d) / b1x)
    b1y = rat_mod(s * w1[1] + t * w2[1], b2y)
    return StdBasis((b1x, rat(b1y)), (0, b2y))


def is_integral(*values: Rat) -> bool:
    return all(not isinstance(v, Fraction) or v.denominator == 1 for v in values)


def is_reduced(w1: Vec, w2: Vec) -> bool:
    """True iff both coordinate projections of the integer lattice are all of Z."""
    if not is_integral(*w1, *w2):
        raise DomainError("is_reduced needs integer coordinates")
    return (math.gcd(int(w1[0]), int(w2[0])) == 1
            and math.gcd(int(w1[1]), int(w2[1])) == 1)


def reduce_lattice(w1: Vec, w2: Vec) -> tuple[tuple[Vec, Vec], int, int]:
    """Divide x and y coordinates by their gcds; return the basis and both scales."""
    if not is_integral(*w1, *w2):
        raise DomainError("reduce_lattice needs integer coordinates")
    det_lattice(w1, w2)
    sx = math.gcd(int(w1[0]), int(w2[0]))
    sy = math.gcd(int(w1[1]), int(w2[1]))
    r1 = (int(w1[0]) // sx, int(w1[1]) // sy)
    r2 = (int(w2[0]) // sx, int(w2[1]) // sy)
    return (r1, r2), sx, sy


def coords_in_basis(basis: StdBasis, v: Vec) -> tuple[Rat, Rat]:
    """Coefficients ``(i, j)`` with ``v = i*b1 + j*b2`` (not necessarily integers)."""
    (b1x, b1y), (_, b2y) = basis
    i = rat(Fraction(v[0]) / b1x)
    j = rat((v[1] - i * b1y) / Fraction(b2y))
    return i, j


def in_lattice(basis: StdBasis, v: Vec) -> bool:
    i, j = coords_in_basis(basis, v)
    return is_integral(i, j)


@dataclass(frozen=True)
class AffineLattice:
    """The translate ``anchor + L`` of a rank-2 lattice ``L`` in ``Q^2``."""

    anchor: Point
    basis: StdBasis

    @classmethod
    def from_basis(cls, w1: Vec, w2: Vec, anchor: Point = (0, 0)) -> "AffineLattice":
        return cls((rat(anchor[0]), rat(anchor[1])), standard_basis(w1, w2))

    @property
    def b1(self) -> Vec:
        return self.basis.b1

    @property
    def b2(self) -> Vec:
        return self.basis.b2

    @property
    def det(self) -> Rat:
        return self.basis.det

    @cached_property
    def reduced(self) -> bool:
        b1, b2 = self.basis
        return is_integral(*b1, *b2) and is_reduced(b1, b2)

    @cached_property
    def mirror_basis(self) -> StdBasis:
        """Standard basis of the lattice mirrored in the diagonal."""
        (b1x, b1y), (b2x, b2y) = self.basis
        return standard_basis((b1y, b1x), (b2y, b2x))

    @cached_property
    def row_step(self) -> Rat:
        """Spacing between consecutive horizontal lattice lines."""
        return rat_gcd(self.basis.b1[1], self.basis.b2[1])

    @cached_property
    def row_period(self) -> Rat:
        """Length of the primitive horizontal lattice vector."""
        return rat(Fraction(self.det) / self.row_step)

    def contains(self, pt: Point) -> bool:
        return in_lattice(self.basis, (pt[0] - self.anchor[0], pt[1] - self.anchor[1]))

    def canonical_anchor(self) -> Point:
        """Representative of the coset with ``0 <= x < b1x`` and ``0 <= y < b2y``."""
        (b1x, b1y), (_, b2y) = self.basis
        ax, ay = self.anchor
        k = floor_div(ax, b1x)
        x, y = ax - k * b1x, ay - k * b1y
        return (x, y - floor_div(y, b2y) * b2y)

    def same_coset(self, other: "AffineLattice") -> bool:
        return self.basis == other.basis and self.canonical_anchor() == other.canonical_anchor()


def reflect(lat: AffineLattice) -> AffineLattice:
    """Mirror in the diagonal ``x = y`` and re-standardise."""
    return AffineLattice((lat.anchor[1], lat.anchor[0]), lat.mirror_basis)


ZZ2 = AffineLattice((0, 0), StdBasis((1, 0), (0, 1)))
