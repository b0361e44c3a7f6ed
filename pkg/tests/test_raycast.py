from fractions import Fraction

import pytest

from hyperhull.exactmath import DomainError
from hyperhull.instrument import counting
from hyperhull.oracle import naive_raycast
from hyperhull.raycast import INF, contains, raycast


def test_contains():
    assert contains(14, (1, 14))
    assert not contains(14, (3, 4))
    assert not contains(14, (-2, -7))


def test_raycast_examples():
    assert raycast(14, (1, 14), (1, -1)) == 13
    assert raycast(14, (1, 14), (1, 0)) == INF
    assert raycast(14, (1, 1), (1, 1)) == 2


def test_raycast_matches_scanner_on_examples():
    assert naive_raycast(14, (1, 14), (1, -1), 100) == 13
    assert naive_raycast(14, (1, 14), (1, 0), 100) is None
    assert naive_raycast(14, (1, 1), (1, 1), 10) == 2


def test_raycast_zero_vector():
    with pytest.raises(DomainError):
        raycast(14, (1, 1), (0, 0))


def test_raycast_quadrant_crossings():
    # leaves through the y-axis, not the curve
    assert raycast(1, (3, 5), (-1, 0)) == 2
    # crosses the x-axis at m = 3, enters H_1 at m = 4
    assert raycast(1, (10, -3), (0, 1)) == 3
    # constant product along the ray: only a coordinate sign change matters
    assert raycast(1, (2, 0), (0, 1)) == 0


def test_raycast_rational():
    n = Fraction(1, 2)
    p = (Fraction(1, 4), 2)
    v = (Fraction(1, 2), Fraction(-1, 3))
    assert raycast(n, p, v) == naive_raycast(n, p, v, 50)


def test_raycast_work_is_bounded():
    with counting() as c:
        for n in range(1, 60):
            for p in [(1, n), (n, 1), (2, 2), (5, 0)]:
                for v in [(1, -1), (2, -1), (-1, 3), (1, 1), (0, -1)]:
                    raycast(n, p, v)
    assert c.quad_root_calls == c.raycasts
    assert c.max_raycast_contains <= 20
