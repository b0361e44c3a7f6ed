from fractions import Fraction

import pytest

from hyperhull.exactmath import DomainError
from hyperhull.lattice import (ZZ2, AffineLattice, StdBasis, det_lattice, in_lattice, is_reduced, reduce_lattice,
                               reflect, standard_basis)


@pytest.mark.parametrize("w1, w2, d", [((1, 0), (0, 1), 1), ((2, 1), (1, 3), 5), ((0, 2), (3, 1), 6)])
def test_det(w1, w2, d):
    assert det_lattice(w1, w2) == d


def test_degenerate():
    with pytest.raises(DomainError):
        det_lattice((1, 2), (2, 4))
    with pytest.raises(DomainError):
        standard_basis((0, 1), (0, 3))


@pytest.mark.parametrize("w1, w2, b1, b2", [
    ((1, 0), (0, 1), (1, 0), (0, 1)),
    ((2, 1), (1, 3), (1, 3), (0, 5)),
    ((0, 2), (3, 1), (3, 1), (0, 2)),
])
def test_standard_basis_examples(w1, w2, b1, b2):
    sb = standard_basis(w1, w2)
    assert sb == StdBasis(b1, b2)
    for w in (w1, w2):
        assert in_lattice(sb, w)


def test_standard_basis_rational():
    sb = standard_basis((Fraction(1, 2), 0), (Fraction(1, 3), Fraction(1, 5)))
    assert sb.b1[0] == Fraction(1, 6)
    assert sb.det == Fraction(1, 10)
    assert 0 <= sb.b1[1] < sb.b2[1]


def test_is_reduced():
    assert is_reduced((1, 0), (0, 1))
    assert not is_reduced((2, 0), (0, 2))
    assert is_reduced((1, 3), (0, 5))
    with pytest.raises(DomainError):
        is_reduced((Fraction(1, 2), 0), (0, 1))


def test_reduce_lattice():
    assert reduce_lattice((2, 0), (0, 2)) == (((1, 0), (0, 1)), 2, 2)
    assert reduce_lattice((1, 3), (0, 5)) == (((1, 3), (0, 5)), 1, 1)
    (r1, r2), sx, sy = reduce_lattice((4, 2), (2, 4))
    assert (r1, r2, sx, sy) == ((2, 1), (1, 2), 2, 2)
    assert is_reduced(r1, r2)


def test_reflect_examples():
    assert reflect(ZZ2) == ZZ2
    lat = AffineLattice.from_basis((1, 3), (0, 5))
    assert reflect(lat).basis == StdBasis((1, 2), (0, 5))
    assert reflect(reflect(lat)) == lat


def test_affine_lattice_membership():
    lat = AffineLattice.from_basis((1, 1), (0, 2), (Fraction(1, 2), 0))
    assert lat.contains((Fraction(3, 2), 1))
    assert not lat.contains((Fraction(3, 2), 0))
    assert lat.det == 2 and lat.row_step == 1 and lat.row_period == 2
    shifted = AffineLattice(lat.canonical_anchor(), lat.basis)
    assert shifted.same_coset(AffineLattice((Fraction(7, 2), 5), lat.basis))
    assert not shifted.same_coset(AffineLattice((Fraction(7, 2), 4), lat.basis))
