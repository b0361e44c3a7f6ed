"""Convex hulls of lattice points above a hyperbola, vertex by vertex.

For the region ``H_n = {x >= 0, y >= 0, xy >= n}`` and an affine lattice
``p + L`` of the rational plane, the vertices of ``conv(H_n ∩ (p + L))`` are
produced left to right with a logarithmic number of exact operations each.
"""
from .bounds import BoundReport, BoundViolation, check, count_vertices, lower_bound_holds, scan, upper_bound_holds
from .exactmath import DomainError, format_rat, rat
from .factor import FactorOutcome, divisors_via_hull, find_factor
from .hull import (INF, enumerate_hull, first_vertex, iter_hull, last_vertex, minsl, next_vertex_from_x,
                   nextpt, prev_vertex)
from .lattice import ZZ2, AffineLattice, StdBasis, reflect, standard_basis
from .raycast import raycast
from .transform import Branch, GeneralHyperbola, StandardProblem, map_back, to_standard

__all__ = [
    "AffineLattice", "BoundReport", "BoundViolation", "Branch", "DomainError", "FactorOutcome",
    "GeneralHyperbola", "INF", "StandardProblem", "StdBasis", "ZZ2", "check", "count_vertices",
    "divisors_via_hull", "enumerate_hull", "find_factor", "first_vertex", "format_rat", "iter_hull",
    "last_vertex", "lower_bound_holds", "map_back", "minsl", "next_vertex_from_x", "nextpt",
    "prev_vertex", "rat", "raycast", "reflect", "scan", "standard_basis", "to_standard",
    "upper_bound_holds",
]
