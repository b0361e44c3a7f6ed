"""Exact integer/rational kernel.

Scalars are Python ``int`` or :class:`fractions.Fraction`.  Both are
arbitrary precision and compare exactly, so every predicate built on top of
this module is decided without rounding.  Functions accept either type and
stay in ``int`` whenever all inputs are integral, which keeps the common
``Z^2`` case fast.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Union

Rat = Union[int, Fraction]


class DomainError(ValueError):
    """An argument outside the domain of an exact operation."""


def rat(value) -> Rat:
    """Coerce ``value`` to a canonical scalar.

    Accepts ints, Fractions and strings such as ``"-3/4"``.  Integral values
    come back as ``int``.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


def format_rat(value: Rat) -> str:
    """``num/den`` with the ``/1`` omitted; sign lives on the numerator."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def floor_div(a: Rat, b: Rat) -> int:
    """``floor(a / b)``, rounding toward minus infinity."""
    if b == 0:
        raise ZeroDivisionError("floor_div by zero")
    return int(a // b)


def ceil_div(a: Rat, b: Rat) -> int:
    if b == 0:
        raise ZeroDivisionError("ceil_div by zero")
    return -int((-a) // b)


def floor_sqrt(a: int) -> int:
    """Largest ``r`` with ``r*r <= a``."""
    if a < 0:
        raise DomainError(f"floor_sqrt of negative number {a}")
    return math.isqrt(a)


def ceil_sqrt(a: int) -> int:
    r = floor_sqrt(a)
    return r if r * r == a else r + 1


def sign(a: Rat) -> int:
    return (a > 0) - (a < 0)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(|a|, |b|) > 0`` and ``s*a + t*b = g``."""
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def common_denominator(*values: Rat) -> int:
    d = 1
    for v in values:
        if type(v) is not int:
            d = math.lcm(d, Fraction(v).denominator)
    return d


def rat_gcd(a: Rat, b: Rat) -> Rat:
    """Positive generator of the additive group ``aZ + bZ`` inside Q."""
    if a == 0 and b == 0:
        raise DomainError("rat_gcd(0, 0) is undefined")
    d = common_denominator(a, b)
    return rat(Fraction(math.gcd(int(a * d), int(b * d)), d))


def rat_bezout(a: Rat, b: Rat) -> tuple[Rat, int, int]:
    """Like :func:`ext_gcd` but for rationals: ``s*a + t*b = rat_gcd(a, b)``."""
    if a == 0 and b == 0:
        raise DomainError("rat_bezout(0, 0) is undefined")
    d = common_denominator(a, b)
    g, s, t = ext_gcd(int(a * d), int(b * d))
    return rat(Fraction(g, d)), s, t


def rat_mod(p: Rat, q: Rat) -> Rat:
    """Representative of ``p`` modulo ``q`` in ``[0, q)`` for ``q > 0``."""
    if q <= 0:
        raise DomainError("modulus must be positive")
    return p - floor_div(p, q) * q


def ceil_log2(x: Rat) -> int:
    """Smallest integer ``k`` with ``2**k >= x`` (``x > 0``)."""
    if x <= 0:
        raise DomainError("ceil_log2 of a non-positive number")
    q = Fraction(x)
    num, den = q.numerator, q.denominator
    # 2**k >= num/den  <=>  num <= den << k  (k >= 0)  or  num << -k <= den
    k = num.bit_length() - den.bit_length()
    while _pow2_ge(k, num, den):
        k -= 1
    while not _pow2_ge(k, num, den):
        k += 1
    return k


def _pow2_ge(k: int, num: int, den: int) -> bool:
    if k >= 0:
        return den << k >= num
    return den >= num << -k


class QuadRoots(NamedTuple):
    count: int
    floors: tuple[int, ...]
    degenerate: bool = False


def quad_roots_floor(a: Rat, b: Rat, c: Rat) -> QuadRoots:
    """Count the distinct real roots of ``a x^2 + b x + c`` and floor them.

    Denominators are cleared first, then the roots are floored with integer
    square roots only.  A double root is reported once.  ``a = b = 0`` sets
    ``degenerate`` and reports no roots.
    """
    if type(a) is not int or type(b) is not int or type(c) is not int:
        d = common_denominator(a, b, c)
        a, b, c = int(a * d), int(b * d), int(c * d)
    if a == 0 and b == 0:
        return QuadRoots(0, (), True)
    floors = root_floors(a, b, c)
    return QuadRoots(len(floors), floors)


def root_floors(a: int, b: int, c: int) -> tuple[int, ...]:
    """Floors of the distinct real roots of an integer polynomial, ascending.

    The bare kernel of :func:`quad_roots_floor`; ``a = b = 0`` gives ``()``.
    """
    if a == 0:
        return () if b == 0 else ((-c) // b,)
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    two_a = 2 * abs(a)
    sb = b if a > 0 else -b
    if disc == 0:
        return ((-sb) // two_a,)
    r = math.isqrt(disc)
    r_up = r if r * r == disc else r + 1
    # floor(p/q) == floor(floor(p)/q) for integer q > 0
    return ((-sb - r_up) // two_a, (-sb + r) // two_a)
