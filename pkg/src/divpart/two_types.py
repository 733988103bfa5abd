"""Optimal maximin-diversity partitions of a two-type budget.

For ``b = (b1, b2)`` with ``b1 <= b2`` a ``k``-partition is a lattice path
``0 = w_0, w_1, ..., w_k = b`` whose steps are the parts. When every step has
slope at least 1, the least diverse part is the steepest one, so the problem
becomes: find ``k - 1`` lattice breakpoints that keep the steepest step as flat
as possible.

Two-part splits take the lattice point just above the diagonal segment whose
vertical gap is ``1 / b1`` (found with a modular inverse). For ``k >= 3`` the
budget is reduced Euclid-style by two shears,

* ``phi``: ``(x, y) -> (x, y - kappa*x)`` with ``kappa = b2 // b1``, and
* ``eta``: ``(x, y) -> (x - m*y, y)`` with ``m = b1 // (b2 - kappa*b1)``,

until a level is reached where a staircase of steps ``(ell, 1)`` followed by
horizontal unit steps is provably optimal. Both shears are unimodular and
preserve slope order on the regions where they are applied, so the staircase
maps back to an optimal path for the original budget.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from divpart.diversity import _norms
from divpart.errors import (
    BadEll,
    DegenerateBudget,
    NegativeImage,
    NonMonotonePath,
    OutOfRange,
    TooFewResources,
)
from divpart.lattice import Point, ceil_point, compare_slopes, mod_inverse
from divpart.perfect import build_perfect_partition

BRANCH_PERFECT = "perfect"
BRANCH_ALG1 = "alg1"
BRANCH_ALG2 = "alg2"


@dataclass(frozen=True)
class TwoTypeInstance:
    b1: int
    b2: int
    k: int

    def __post_init__(self):
        if not 1 <= self.b1 <= self.b2:
            raise OutOfRange(f"expected 1 <= b1 <= b2, got {(self.b1, self.b2)}")
        if self.k < 2:
            raise OutOfRange(f"expected k >= 2, got {self.k}")
        if self.k > self.b1:
            raise TooFewResources(
                f"k={self.k} exceeds the scarcer type count {self.b1}",
                max_parts=self.b1,
            )


@dataclass(frozen=True)
class ReductionFrame:
    """One level of the reduction: ``b = (b1p, kappa*b1p + b2p)``.

    ``m`` is ``b1p // b2p`` (``None`` when ``b2p == 0``). ``ell`` is only set on
    the terminal level, where the staircase construction applies.
    """

    kappa: int
    b1p: int
    b2p: int
    m: Optional[int]
    ell: Optional[int] = None

    @classmethod
    def from_budget(cls, b1: int, b2: int) -> "ReductionFrame":
        if not 1 <= b1 <= b2:
            raise OutOfRange(f"expected 1 <= b1 <= b2, got {(b1, b2)}")
        kappa, b2p = divmod(b2, b1)
        return cls(kappa, b1, b2p, b1 // b2p if b2p else None)

    @property
    def budget(self) -> tuple[int, int]:
        return self.b1p, self.kappa * self.b1p + self.b2p

    @property
    def reduced(self) -> tuple[int, int]:
        """``b'``, the image of the budget under ``phi``."""
        return self.b1p, self.b2p

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "b_prime": [self.b1p, self.b2p],
            "m": self.m,
            "ell": self.ell,
        }


@dataclass(frozen=True)
class BreakpointPath:
    points: list
    budget: tuple
    frames: tuple = field(default=(), compare=False)


def phi(frame: ReductionFrame, p: Sequence[int]) -> Point:
    x, y = p
    y2 = y - frame.kappa * x
    if y2 < 0:
        raise NegativeImage(f"phi image of {tuple(p)} has negative y")
    return Point(x, y2)


def phi_inv(frame: ReductionFrame, p: Sequence[int]) -> Point:
    x, y = p
    return Point(x, y + frame.kappa * x)


def _m(frame: ReductionFrame) -> int:
    if frame.m is None:
        raise DegenerateBudget(f"eta is undefined: b1={frame.b1p} divides b2")
    return frame.m


def eta(frame: ReductionFrame, p: Sequence[int]) -> Point:
    x, y = p
    x2 = x - _m(frame) * y
    if x2 < 0:
        raise NegativeImage(f"eta image of {tuple(p)} has negative x")
    return Point(x2, y)


def eta_inv(frame: ReductionFrame, p: Sequence[int]) -> Point:
    x, y = p
    return Point(x + _m(frame) * y, y)


def split_two(b1: int, b2: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Optimal two-part split of ``(b1, b2)``, ``b1 <= b2``.

    >>> split_two(5, 7)
    ((2, 3), (3, 4))
    """
    if b1 > b2:
        raise OutOfRange(f"expected b1 <= b2, got {(b1, b2)}")
    if b1 < 2:
        raise TooFewResources(f"cannot give both parts a unit of a type with {b1} entities", max_parts=b1)
    d = gcd(b1, b2)
    if d >= 2:
        x = (b1 // d, b2 // d)
    else:
        tau = b2 % b1
        i_star = (b1 - 1) * mod_inverse(tau, b1) % b1
        x = tuple(ceil_point(i_star, (b1, b2)))
    return x, (b1 - x[0], b2 - x[1])


def find_ell(frame: ReductionFrame, k: int) -> Optional[int]:
    """The ``ell`` in ``[1, m]`` with ``b1p - ell*b2p + 1 <= k <= b1p - (ell-1)*b2p``, if any."""
    m = _m(frame)
    b1p, b2p = frame.b1p, frame.b2p
    ell = max(1, -(-(b1p - k + 1) // b2p))
    if ell <= m and b1p - ell * b2p + 1 <= k <= b1p - (ell - 1) * b2p:
        return ell
    return None


def base_case_breakpoints(frame: ReductionFrame, k: int, ell: int) -> list[Point]:
    """Staircase of ``k - 1`` breakpoints in ``phi`` coordinates.

    Steps of ``(ell, 1)`` climb to height ``min(b2p, k - 1)``; any remaining
    breakpoints are consecutive points on the horizontal line ``y = b2p``.
    """
    m = _m(frame)
    b1p, b2p = frame.b1p, frame.b2p
    if not (1 <= ell <= m and b1p - ell * b2p + 1 <= k <= b1p - (ell - 1) * b2p):
        raise BadEll(f"ell={ell} is out of range for k={k} and b'={(b1p, b2p)}")
    rise = min(b2p, k - 1)
    points = [Point(i * ell, i) for i in range(1, rise + 1)]
    start = ell * b2p
    points.extend(Point(start + j, b2p) for j in range(1, k - rise))
    return points


def reduction_chain(b1: int, b2: int, k: int) -> list[ReductionFrame]:
    """Frames visited by the reduction, outermost first; the last carries ``ell``."""
    TwoTypeInstance(b1, b2, k)
    frames = []
    while True:
        frame = ReductionFrame.from_budget(b1, b2)
        if frame.m is None:
            raise DegenerateBudget(
                f"b1={b1} divides b2={b2}; route this budget to the perfect partition"
            )
        ell = find_ell(frame, k)
        if ell is not None:
            frames.append(replace(frame, ell=ell))
            return frames
        frames.append(frame)
        # k <= b1p - m*b2p here, so the next level still has b1 >= k.
        b1, b2 = frame.b1p - frame.m * frame.b2p, frame.b2p


def _mat_mul(a, b):
    a11, a12, a21, a22 = a
    b11, b12, b21, b22 = b
    return (
        a11 * b11 + a12 * b21,
        a11 * b12 + a12 * b22,
        a21 * b11 + a22 * b21,
        a21 * b12 + a22 * b22,
    )


def _back_map(frames: Sequence[ReductionFrame]):
    """Matrix of ``phi_0^-1 . eta_0^-1 . phi_1^-1 . ... . phi_last^-1``."""
    mat = (1, 0, 0, 1)
    for depth, frame in enumerate(frames):
        mat = _mat_mul(mat, (1, 0, frame.kappa, 1))
        if depth < len(frames) - 1:
            mat = _mat_mul(mat, (1, frame.m, 0, 1))
    return mat


def breakpoints_k(b1: int, b2: int, k: int) -> BreakpointPath:
    """Breakpoints of an optimal ``k``-partition, ``3 <= k <= b1 <= b2``.

    The recursion of the reduction is unrolled: frames are collected on the
    way down, then the staircase is mapped back through the composed inverse
    shears in a single pass.
    """
    if k < 3:
        raise OutOfRange(f"breakpoints_k needs k >= 3, got {k}")
    frames = reduction_chain(b1, b2, k)
    last = frames[-1]
    a11, a12, a21, a22 = _back_map(frames)
    ell, b2p = last.ell, last.b2p
    rise = min(b2p, k - 1)
    # Staircase points are multiples of one step; fillers advance by (1, 0).
    sx, sy = a11 * ell + a12, a21 * ell + a22
    points = [Point(i * sx, i * sy) for i in range(1, rise + 1)]
    if rise < k - 1:
        ox, oy = ell * b2p, b2p
        cx, cy = a11 * ox + a12 * oy, a21 * ox + a22 * oy
        points.extend(Point(cx + j * a11, cy + j * a21) for j in range(1, k - rise))
    return BreakpointPath(points, (b1, b2), tuple(frames))


def partition_from_breakpoints(path: BreakpointPath) -> list[tuple[int, int]]:
    """Parts ``w_j - w_{j-1}`` of the path ``0, w_1, ..., w_{k-1}, b``."""
    seq = [(0, 0), *path.points, tuple(path.budget)]
    parts = [(w[0] - v[0], w[1] - v[1]) for v, w in zip(seq, seq[1:])]
    for j, (dx, dy) in enumerate(parts):
        if dx < 0 or dy < 0 or not (dx or dy):
            raise NonMonotonePath(
                f"step from {tuple(seq[j])} to {tuple(seq[j + 1])} is not a nonzero nonnegative vector"
            )
    return parts


def segment_slopes_nonincreasing(parts: Sequence[Sequence[int]]) -> bool:
    return all(compare_slopes(p, q) >= 0 for p, q in zip(parts, parts[1:]))


@dataclass
class PartitionResult:
    budget: tuple
    k: int
    parts: list
    diversities: list
    epsilon: Fraction
    branch: str
    trace: tuple = ()
    swapped: bool = False

    @property
    def min_diversity(self) -> Fraction:
        return min(self.diversities)


def _diversities(parts) -> list[Fraction]:
    cache: dict = {}
    out = []
    for p in parts:
        value = cache.get(p)
        if value is None:
            value = cache[p] = Fraction(*_norms(p))
        out.append(value)
    return out


def solve(b1: int, b2: int, k: int) -> PartitionResult:
    """Maximin-diversity ``k``-partition of the two-type budget ``(b1, b2)``.

    Routes to the perfect partition when ``k <= gcd(b1, b2)``, to the two-part
    split when ``k == 2`` and to the shear reduction otherwise. Input order is
    arbitrary; parts are reported in the caller's coordinate order.
    """
    b1, b2, k = int(b1), int(b2), int(k)
    if b1 < 1 or b2 < 1:
        raise OutOfRange(f"budget entries must be positive, got {(b1, b2)}")
    if k < 1:
        raise OutOfRange(f"k must be positive, got {k}")
    swapped = b1 > b2
    if swapped:
        b1, b2 = b2, b1
    if k > b1:
        raise TooFewResources(
            f"k={k} exceeds the scarcer type count {b1}; at most {b1} parts", max_parts=b1
        )
    trace: tuple = ()
    if k <= gcd(b1, b2):
        branch = BRANCH_PERFECT
        parts = build_perfect_partition((b1, b2), k)
    elif k == 2:
        branch = BRANCH_ALG1
        parts = list(split_two(b1, b2))
    else:
        branch = BRANCH_ALG2
        path = breakpoints_k(b1, b2, k)
        trace = path.frames
        parts = partition_from_breakpoints(path)
    if swapped:
        parts = [(y, x) for x, y in parts]
    divs = _diversities(parts)
    global_div = Fraction(*_norms((b1, b2)))
    epsilon = 1 - min(divs) / global_div
    budget = (b2, b1) if swapped else (b1, b2)
    return PartitionResult(budget, k, parts, divs, epsilon, branch, trace, swapped)
