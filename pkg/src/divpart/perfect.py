"""Perfect partitions: every part at least as diverse as the whole budget.

A budget ``b`` splits into ``k`` parts with no diversity loss exactly when
``k <= gcd(b)``. The witness uses ``k - 1`` copies of the primitive vector
``b / gcd(b)`` and gives the remainder to the last part.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from divpart.diversity import as_counts
from divpart.errors import Infeasible, ZeroEntry
from divpart.lattice import gcd_vector


@dataclass(frozen=True)
class PerfectVerdict:
    max_parts: int
    feasible_for_k: bool
    witness: Optional[list[tuple[int, ...]]] = None


def _positive_budget(b) -> tuple[int, ...]:
    budget = as_counts(b)
    if any(v == 0 for v in budget):
        raise ZeroEntry(f"every budget entry must be positive, got {budget}")
    return budget


def max_perfect_parts(b: Iterable[int]) -> int:
    return gcd_vector(_positive_budget(b))


def build_perfect_partition(b: Iterable[int], k: int) -> list[tuple[int, ...]]:
    """Return ``k`` parts of ``b`` that each have diversity exactly ``D(b)``.

    Raises
    ------
    Infeasible
        If ``k > gcd(b)``; the exception carries ``max_parts = gcd(b)``.

    >>> build_perfect_partition((6, 15, 21), 2)
    [(2, 5, 7), (4, 10, 14)]
    """
    budget = _positive_budget(b)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = gcd_vector(budget)
    if k > d:
        raise Infeasible(
            f"no perfect {k}-partition of {budget}: at most {d} parts", max_parts=d
        )
    unit = tuple(v // d for v in budget)
    last = tuple((d - k + 1) * u for u in unit)
    return [unit] * (k - 1) + [last]


def perfect_verdict(b: Iterable[int], k: int) -> PerfectVerdict:
    budget = _positive_budget(b)
    try:
        witness = build_perfect_partition(budget, k)
    except Infeasible as exc:
        return PerfectVerdict(exc.max_parts, False, None)
    return PerfectVerdict(gcd_vector(budget), True, witness)
