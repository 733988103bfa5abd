"""Exact Simpson diversity, Hill numbers and the maximin loss objective.

Count vectors are plain tuples of Python ints. Every diversity value, loss and
slope is a :class:`fractions.Fraction`; floats only appear in the ``approx``
rendering and in :func:`hill_number`, which is a float-valued metric.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from divpart.errors import NegativeOrder, SumMismatch, ZeroPart, ZeroVector

#: Exact nonnegative rational. ``Fraction`` keeps lowest terms on construction
#: and compares by cross-multiplication.
ExactRatio = Fraction

TypeVector = tuple


def as_counts(x: Iterable[int]) -> tuple[int, ...]:
    """Validate and convert input to a tuple of nonnegative ints.

    Accepts any iterable of integer-like values (``int``, numpy integers).
    Floats are rejected, even integral ones, so no precision is silently lost.
    """
    try:
        counts = tuple(operator.index(v) for v in x)
    except TypeError:
        raise TypeError(f"counts must be integers, got {x!r}") from None
    if not counts:
        raise ValueError("count vector must have at least one entry")
    if any(v < 0 for v in counts):
        raise ValueError(f"counts cannot be negative: {counts}")
    return counts


def _norms(x: Sequence[int]) -> tuple[int, int]:
    """Return ``(||x||_1 ** 2, ||x||_2 ** 2)`` for a validated vector."""
    s = sum(x)
    if s == 0:
        raise ZeroVector(f"diversity is undefined for the zero vector {tuple(x)}")
    return s * s, sum(v * v for v in x)


@dataclass(frozen=True)
class DiversityValue:
    exact: Fraction

    @property
    def approx(self) -> float:
        # float(Fraction) is correctly rounded.
        return float(self.exact)

    def __float__(self) -> float:
        return self.approx


def simpson_index(x: Iterable[int]) -> DiversityValue:
    """Simpson dominance index ``||x||_1^2 / ||x||_2^2``.

    Parameters
    ----------
    x : iterable of int
        Nonnegative counts per type, at least one positive.

    Returns
    -------
    DiversityValue
        Exact value in lowest terms, with a float rendering in ``approx``.

    Examples
    --------
    >>> simpson_index((12, 16, 20)).exact
    Fraction(72, 25)
    >>> simpson_index((5, 0, 0)).exact
    Fraction(1, 1)
    """
    num, den = _norms(as_counts(x))
    return DiversityValue(Fraction(num, den))


def diversity(x: Iterable[int]) -> Fraction:
    """Shorthand for ``simpson_index(x).exact``."""
    num, den = _norms(as_counts(x))
    return Fraction(num, den)


def compare_diversity(x: Iterable[int], y: Iterable[int]) -> int:
    """Return -1, 0 or 1 as ``D(x)`` is less than, equal to or greater than ``D(y)``.

    Decided by integer cross-multiplication; never touches floating point.
    """
    x1, x2 = _norms(as_counts(x))
    y1, y2 = _norms(as_counts(y))
    lhs, rhs = x1 * y2, y1 * x2
    return (lhs > rhs) - (lhs < rhs)


def squared_cos_angle_with_ones(x: Iterable[int]) -> Fraction:
    """``cos^2`` of the angle between ``x`` and the all-ones vector; equals ``D(x) / r``."""
    counts = as_counts(x)
    num, den = _norms(counts)
    return Fraction(num, len(counts) * den)


def hill_number(x: Iterable[int], q: float) -> float:
    """Hill number of order ``q`` (float-valued).

    ``q = 0`` gives richness, ``q = 1`` the exponential of Shannon entropy,
    ``q = 2`` the Simpson index and ``q = math.inf`` the inverse of the largest
    proportion.
    """
    counts = as_counts(x)
    n = sum(counts)
    if n == 0:
        raise ZeroVector(f"diversity is undefined for the zero vector {counts}")
    if math.isnan(q) or q < 0:
        raise NegativeOrder(f"order must be >= 0, got {q}")
    positive = [v for v in counts if v > 0]
    if q == 0:
        return float(len(positive))
    if math.isinf(q):
        return n / max(positive)
    if q == 1:
        return math.exp(-math.fsum(v / n * math.log(v / n) for v in positive))
    total = math.fsum((v / n) ** q for v in positive)
    return total ** (1.0 / (1.0 - q))


def min_diversity(parts: Sequence[Sequence[int]]) -> Fraction:
    """Smallest Simpson index among ``parts``; each part must be nonzero."""
    best_num = best_den = None
    seen = {}
    for p in parts:
        key = tuple(p)
        if key in seen:
            continue
        num, den = seen[key] = _norms(key)
        if best_num is None or num * best_den < best_num * den:
            best_num, best_den = num, den
    if best_num is None:
        raise ValueError("need at least one part")
    return Fraction(best_num, best_den)


def epsilon_of_partition(parts: Sequence[Iterable[int]], b: Iterable[int]) -> Fraction:
    """Diversity loss ``1 - min_i D(parts[i]) / D(b)`` of a partition of ``b``.

    Examples
    --------
    >>> epsilon_of_partition([(2, 5, 7), (4, 10, 14)], (6, 15, 21))
    Fraction(0, 1)
    """
    budget = as_counts(b)
    vectors = [as_counts(p) for p in parts]
    if not vectors:
        raise SumMismatch("empty partition")
    for p in vectors:
        if len(p) != len(budget):
            raise SumMismatch(f"part {p} has {len(p)} types, budget has {len(budget)}")
        if sum(p) == 0:
            raise ZeroPart("partition contains an all-zero part")
    totals = tuple(map(sum, zip(*vectors)))
    if totals != budget:
        raise SumMismatch(f"parts sum to {totals}, expected {budget}")
    return 1 - min_diversity(vectors) / diversity(budget)
