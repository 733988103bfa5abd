"""Number theory and two-dimensional lattice geometry.

Points are ``Point(x, y)`` named tuples of nonnegative ints; a two-type budget
``b = (b1, b2)`` spans the segment from the origin to ``b``. All predicates are
exact integer tests.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from divpart.errors import AllZero, NotCoprime, OutOfRange, VerticalSlope


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])


class ExtEuclidResult(NamedTuple):
    g: int
    coefficients: tuple[int, ...]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def ext_euclid(values: Sequence[int]) -> ExtEuclidResult:
    """gcd of nonnegative ``values`` together with Bezout coefficients.

    More than two values are folded pairwise from the left: with
    ``g_j = gcd(g_{j-1}, v_j) = s*g_{j-1} + t*v_j`` the earlier coefficients are
    scaled by ``s``.

    >>> ext_euclid([5, 7])
    ExtEuclidResult(g=1, coefficients=(3, -2))
    """
    values = [int(v) for v in values]
    if not values or any(v < 0 for v in values):
        raise ValueError("values must be a nonempty list of nonnegative integers")
    if not any(values):
        raise AllZero("gcd is undefined when every value is zero")
    g, coeffs = values[0], [1]
    for v in values[1:]:
        g, s, t = _ext_gcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
    return ExtEuclidResult(g, tuple(coeffs))


def gcd_vector(values: Sequence[int]) -> int:
    return ext_euclid(values).g


def mod_inverse(a: int, n: int) -> int:
    """Return ``u`` in ``[1, n-1]`` with ``a*u = 1 (mod n)``."""
    if n < 2:
        raise OutOfRange(f"modulus must be >= 2, got {n}")
    g, s, _ = _ext_gcd(a % n, n)
    if g != 1:
        raise NotCoprime(f"{a} has no inverse modulo {n} (gcd {g})")
    return s % n


def _check_two_type(b: Sequence[int]) -> tuple[int, int]:
    if len(b) != 2:
        raise OutOfRange(f"expected a two-type budget, got {tuple(b)}")
    b1, b2 = int(b[0]), int(b[1])
    if b1 < 1 or b2 < 1:
        raise OutOfRange(f"budget entries must be positive, got {(b1, b2)}")
    return b1, b2


def ceil_point(i: int, b: Sequence[int]) -> Point:
    """Lowest lattice point on the vertical line ``x = i`` weakly above the segment."""
    b1, b2 = _check_two_type(b)
    return Point(i, -((-b2 * i) // b1))


def vertical_distance_num(i: int, b: Sequence[int]) -> int:
    """Vertical distance from ``ceil_point(i, b)`` to the segment, times ``b1``.

    Equals ``b1 - (b2*i mod b1)``.
    """
    b1, b2 = _check_two_type(b)
    if b1 > b2:
        raise OutOfRange(f"expected b1 <= b2, got {(b1, b2)}")
    if not 1 <= i <= b1 - 1:
        raise OutOfRange(f"i must lie in [1, {b1 - 1}], got {i}")
    g, _, _ = _ext_gcd(b1, b2)
    if g != 1:
        raise NotCoprime(f"budget {(b1, b2)} is not coprime")
    return b1 - (b2 * i) % b1


def slope(p: Sequence[int]) -> Fraction:
    x, y = p
    if x == 0:
        raise VerticalSlope(f"slope of {tuple(p)} is vertical")
    return Fraction(y, x)


def compare_slopes(p: Sequence[int], q: Sequence[int]) -> int:
    """Three-way comparison of ``y/x`` for two nonzero vectors with ``x, y >= 0``.

    Vertical vectors (``x == 0``) compare as larger than every finite slope.
    """
    lhs, rhs = p[1] * q[0], q[1] * p[0]
    return (lhs > rhs) - (lhs < rhs)


def in_upper_region(p: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``p`` is a nontrivial allocation lying weakly above the segment 0-b."""
    x, y = p
    b1, b2 = b
    return (
        0 <= x <= b1
        and 0 <= y <= b2
        and 1 <= x + y <= b1 + b2 - 1
        and y * b1 >= x * b2
    )
