import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hyperhull.exactmath import DomainError
from hyperhull.hull import enumerate_hull
from hyperhull.lattice import ZZ2, AffineLattice, StdBasis, is_reduced
from hyperhull.transform import (Branch, BranchError, DegenerateConic, GeneralHyperbola, NotRationalHyperbola,
                                 factor_form, map_back, to_standard)


def test_identity_problem():
    sp = to_standard(GeneralHyperbola(0, 1, 0, 0, 0, 14))
    assert sp.n_prime == 14
    assert sp.lat == ZZ2
    assert sp.back((3, 5)) == (3, 5)
    assert map_back(sp, [(1, 14), (2, 7)]) == [(1, 14), (2, 7)]


def test_factor_1_3_2():
    h = GeneralHyperbola(1, 3, 2, 0, 0, 14)
    sp = to_standard(h)
    assert h.delta == 1
    assert {k: sp.forward.meta[k] for k in ("a1", "c1", "a2", "c2")} == {"a1": 1, "c1": 1, "a2": 1, "c2": 2}
    assert (sp.forward.m11, sp.forward.m12, sp.forward.m21, sp.forward.m22) == (1, 2, 1, 1)
    assert sp.lat.det == 1 and sp.n_prime == 14
    x, y = sp.back((1, 14))
    assert (x, y) == (27, -13)
    assert (x + y) * (x + 2 * y) == 14


def test_factor_1_2_0():
    sp = to_standard(GeneralHyperbola(1, 2, 0, 0, 0, 6))
    assert sp.lat.basis == StdBasis((1, 1), (0, 2))
    assert sp.lat.anchor == (0, 0) and sp.n_prime == 6
    assert sp.back.m11 == 1 and sp.back.m12 == 0
    assert sp.back.m21 == Fraction(-1, 2) and sp.back.m22 == Fraction(1, 2)
    pts = map_back(sp, enumerate_hull(6, sp.lat))
    assert len(pts) == 4
    assert all(x * (x + 2 * y) >= 6 for x, y in pts)


def test_map_back_on_1_3_2():
    h = GeneralHyperbola(1, 3, 2, 0, 0, 14)
    sp = to_standard(h)
    pts = map_back(sp, enumerate_hull(14, sp.lat))
    assert len(pts) == 6
    assert all(h.form(p) >= 14 for p in pts)
    assert all(x + y >= 0 and x + 2 * y >= 0 for x, y in pts)


def test_errors():
    with pytest.raises(NotRationalHyperbola):
        GeneralHyperbola(1, 1, 1, 0, 0, 3)
    with pytest.raises(NotRationalHyperbola):
        GeneralHyperbola(1, 3, 1, 0, 0, 3)
    with pytest.raises(DegenerateConic):
        GeneralHyperbola(1, 3, 2, 0, 0, 0)
    with pytest.raises(BranchError):
        to_standard(GeneralHyperbola(1, 3, 2, 0, 0, 14), Branch.containing((0, 0)))
    with pytest.raises(BranchError):
        to_standard(GeneralHyperbola(1, 3, 2, 0, 0, -14))
    with pytest.raises(DomainError):
        map_back(to_standard(GeneralHyperbola(1, 2, 0, 0, 0, 6)), [(1, 2)])


def test_branch_by_sample_and_negative_b():
    h = GeneralHyperbola(1, 3, 2, 0, 0, 14)
    # (-20, 1) has x + y < 0 and x + 2y < 0: the opposite component
    sp = to_standard(h, Branch.containing((-20, 1)))
    assert sp.quadrant_flips == (-1, -1)
    pts = map_back(sp, enumerate_hull(sp.n_prime, sp.lat))
    assert all(x + y <= 0 and x + 2 * y <= 0 and h.form((x, y)) >= 14 for x, y in pts)

    neg = GeneralHyperbola(0, -1, 0, 0, 0, -14)
    sp = to_standard(neg)
    assert sp.n_prime == 14
    pts = map_back(sp, enumerate_hull(14, sp.lat))
    assert pts == enumerate_hull(14, ZZ2)


def test_negative_n_branches():
    h = GeneralHyperbola(2, -5, 3, Fraction(1, 2), Fraction(1, 3), -7)
    with pytest.raises(BranchError):
        to_standard(h, Branch.containing((5, 0)))
    sp = to_standard(h, Branch.containing(("-59/2", "-62/3")))
    pts = map_back(sp, enumerate_hull(sp.n_prime, sp.lat))
    assert pts and all(h.form(p) <= -7 for p in pts)


factor_pair = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))


def _form_from_factors(p1, q1, p2, q2):
    return p1 * p2, p1 * q2 + q1 * p2, q1 * q2, abs(p1 * q2 - q1 * p2)


@settings(max_examples=1500, deadline=None)
@given(factor_pair, st.integers(1, 40),
       st.fractions(min_value=-3, max_value=3, max_denominator=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_transform_properties(f, n, x0, y0):
    a, b, c, delta = _form_from_factors(*f)
    assume(delta > 0)
    h = GeneralHyperbola(a, b, c, x0, y0, n)
    assert h.delta == delta
    negated = a * c == 0 and b < 0
    aa, bb, cc = (-a, -b, -c) if negated else (a, b, c)
    a1, a2, c1, c2 = factor_form(aa, bb, cc, delta)
    assert a1 * a2 == aa and c1 * c2 == cc
    assert {a1 * c1, a2 * c2} == {(bb - delta) // 2, (bb + delta) // 2}
    if a * c != 0:
        assert a1 * c1 == (bb - delta) // 2 and a2 * c2 == (bb + delta) // 2

    # with b < 0 normalised away the form may be -XY, whose component has mixed signs
    sp = to_standard(h, Branch(signs=(1, -1) if negated else (1, 1)))
    assert sp.lat.det == delta
    bound = max(abs(a), abs(b), abs(c))
    assert all(abs(t) <= bound for t in (a1, a2, c1, c2))
    # the standard basis is bounded by the determinant, and delta^2 <= 5 bound^2
    basis = sp.lat.basis
    assert all(0 <= t <= delta for t in (*basis.b1, *basis.b2))
    assert delta * delta <= 5 * bound * bound
    if math.gcd(a, b, c) == 1:
        assert is_reduced(basis.b1, basis.b2)

    pt = (Fraction(7, 3) + x0, Fraction(-5, 2))
    assert sp.back(sp.forward(pt)) == pt
    q = sp.forward(pt)
    # the form becomes the product of the new coordinates, up to the quadrant flips
    assert q[0] * q[1] == sp.quadrant_flips[0] * sp.quadrant_flips[1] * h.form(pt) * (-1 if negated else 1)


@settings(max_examples=200, deadline=None)
@given(factor_pair, st.integers(1, 30))
def test_mapped_vertices_are_integer_points_of_the_component(f, n):
    a, b, c, delta = _form_from_factors(*f)
    assume(delta > 0)
    h = GeneralHyperbola(a, b, c, 0, 0, n)
    sp = to_standard(h, Branch(signs=(1, -1) if a * c == 0 and b < 0 else (1, 1)))
    chain = enumerate_hull(sp.n_prime, sp.lat)
    pts = map_back(sp, chain)
    assert all(h.form(p) >= n for p in pts)
    assert [sp.forward(p) for p in pts] == chain
