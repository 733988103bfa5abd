"""Exhaustive ground truth for small instances of any dimension.

Two independent exhaustive searches are provided:

``enumerate``
    streams every unordered ``k``-partition of ``b`` into nonzero parts, with
    parts in non-decreasing lexicographic order so each multiset appears once.
``lattice``
    a max-min dynamic program over all sub-budgets ``w <= b``: the best value
    with ``j`` parts is ``max_x min(D(x), best_{j-1}(w - x))``. Diversity
    values are replaced by their exact rank among all vectors in the box, so
    the numpy arithmetic is integer-only.

Both explore the full feasible set; neither uses any structural result about
optimal partitions.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from divpart.diversity import _norms, as_counts, diversity
from divpart.errors import NotCoprime, OutOfRange, SearchSpaceTooLarge, TooFewResources
from divpart.lattice import Point, ceil_point, compare_slopes

DEFAULT_GUARD = 10**8


def enumeration_estimate(b: Sequence[int], k: int) -> int:
    """Upper estimate of the number of unordered ``k``-partitions of ``b``."""
    ordered = math.prod(math.comb(v + k - 1, k - 1) for v in b)
    return -(-ordered // math.factorial(k))


def lattice_search_cost(b: Sequence[int], k: int) -> int:
    """Number of (sub-budget, part) pairs the dynamic program visits."""
    return max(1, k - 1) * math.prod(math.comb(v + 2, 2) for v in b)


def _validate(b, k) -> tuple[int, ...]:
    budget = as_counts(b)
    if k < 1:
        raise OutOfRange(f"k must be positive, got {k}")
    if sum(budget) < k:
        raise TooFewResources(
            f"{sum(budget)} entities cannot fill {k} nonempty parts", max_parts=sum(budget)
        )
    return budget


def _check_guard(estimate: int, guard: int, what: str):
    if estimate > guard:
        raise SearchSpaceTooLarge(
            f"{what} would visit ~{estimate:.3g} candidates, above the guard {guard:.3g}",
            estimate=estimate,
            guard=guard,
        )


def _partitions(rest: tuple, k: int, lower: tuple) -> Iterator[tuple]:
    if k == 1:
        if any(rest) and rest >= lower:
            yield (rest,)
        return
    for p in itertools.product(*(range(v + 1) for v in rest)):
        if p < lower or not any(p):
            continue
        # Every later part is lexicographically >= p, so has first entry >= p[0].
        if rest[0] - p[0] < (k - 1) * p[0]:
            break
        remaining = tuple(r - c for r, c in zip(rest, p))
        if remaining < p:
            continue
        for tail in _partitions(remaining, k - 1, p):
            yield (p,) + tail


def enumerate_k_partitions(
    b: Sequence[int], k: int, guard: int = DEFAULT_GUARD
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield each unordered ``k``-partition of ``b`` into nonzero parts once.

    Parts within a partition are sorted lexicographically. Raises
    :class:`SearchSpaceTooLarge` before yielding anything if the estimated
    count exceeds ``guard``.
    """
    budget = _validate(b, k)
    _check_guard(enumeration_estimate(budget, k), guard, "enumeration")
    zero = (0,) * len(budget)
    return _partitions(budget, k, zero)


def _brute_enumerate(budget, k):
    best = None
    best_num = best_den = None
    for parts in _partitions(budget, k, (0,) * len(budget)):
        num = den = None
        for p in parts:
            s2, q = _norms(p)
            if num is None or s2 * den < num * q:
                num, den = s2, q
        if best is None or num * best_den > best_num * den:
            best, best_num, best_den = parts, num, den
    return Fraction(best_num, best_den), list(best)


def _rank_box(budget, score):
    shape = tuple(v + 1 for v in budget)
    keys = [score(idx) if any(idx) else None for idx in np.ndindex(*shape)]
    ordered = sorted({key for key in keys if key is not None})
    lookup = {v: i for i, v in enumerate(ordered)}
    rank = np.array([-1 if key is None else lookup[key] for key in keys], dtype=np.int64)
    return rank.reshape(shape), ordered


def _simpson_score(x) -> Fraction:
    return Fraction(*_norms(x))


def maximin_lattice(budget: Sequence[int], k: int, score=_simpson_score):
    """Best achievable ``min(score(part))`` over ``k``-partitions of ``budget``.

    ``score`` maps a nonzero vector to any exactly comparable value. Returns
    the optimal score and one partition attaining it. No guard is applied.
    """
    budget = tuple(budget)
    shape = tuple(v + 1 for v in budget)
    rank, ordered = _rank_box(budget, score)
    if k == 1:
        return ordered[rank[budget]], [budget]
    shifts = [idx for idx in np.ndindex(*shape) if any(idx)]
    prev = rank
    choices = []
    for _ in range(2, k):
        cur = np.full(shape, -1, dtype=np.int64)
        choice = np.full(shape, -1, dtype=np.int64)
        for flat, x in enumerate(shifts):
            src = prev[tuple(slice(0, v - c + 1) for v, c in zip(budget, x))]
            cand = np.minimum(src, rank[x])
            window = tuple(slice(c, None) for c in x)
            dst = cur[window]
            better = cand > dst
            if better.any():
                dst[better] = cand[better]
                choice[window][better] = flat
        prev = cur
        choices.append(choice)
    # Last part x pairs with the sub-budget b - x, i.e. prev read backwards.
    final = np.minimum(rank, prev[(slice(None, None, -1),) * len(budget)])
    top = int(final.max())
    if top < 0:
        raise TooFewResources(f"no {k}-partition of {budget} into nonzero parts")
    x = np.unravel_index(int(final.argmax()), shape)
    parts = [tuple(int(c) for c in x)]
    w = tuple(v - c for v, c in zip(budget, parts[0]))
    for choice in reversed(choices):
        part = shifts[int(choice[w])]
        parts.append(tuple(int(c) for c in part))
        w = tuple(a - c for a, c in zip(w, part))
    parts.append(w)
    return ordered[top], sorted(parts)


def brute_force_pmd(
    b: Sequence[int], k: int, guard: int = DEFAULT_GUARD, method: str = "auto"
) -> tuple[Fraction, list[tuple[int, ...]]]:
    """Exact minimum diversity loss over all ``k``-partitions of ``b``.

    Parameters
    ----------
    b : sequence of int
        Budget, any number of types.
    k : int
        Number of nonzero parts.
    guard : int
        Maximum admissible search size for the chosen method.
    method : {"auto", "enumerate", "lattice"}
        ``auto`` uses the dynamic program when it fits under the guard and
        falls back to enumeration otherwise.

    Returns
    -------
    (epsilon, parts)
        The optimal loss and one maximin partition. The enumeration returns
        the first optimum in canonical order; the dynamic program returns the
        optimum whose last part is lexicographically smallest.
    """
    budget = _validate(b, k)
    if method == "auto":
        lattice, enum = lattice_search_cost(budget, k), enumeration_estimate(budget, k)
        if lattice <= guard:
            method = "lattice"
        elif enum <= guard:
            method = "enumerate"
        else:
            _check_guard(min(lattice, enum), guard, "exhaustive search")
    if method == "lattice":
        _check_guard(lattice_search_cost(budget, k), guard, "lattice search")
        best, parts = maximin_lattice(budget, k)
    elif method == "enumerate":
        _check_guard(enumeration_estimate(budget, k), guard, "enumeration")
        best, parts = _brute_enumerate(budget, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return 1 - best / diversity(budget), parts


def brute_force_best_upper_point(b: Sequence[int]) -> Point:
    """Flattest lattice point ``(i, ceil(b2*i/b1))`` over ``i`` in ``[1, b1-1]``.

    Scans every column; ties go to the smaller ``i``.
    """
    b1, b2 = (int(v) for v in b)
    if not 2 <= b1 <= b2:
        raise OutOfRange(f"expected 2 <= b1 <= b2, got {(b1, b2)}")
    if math.gcd(b1, b2) != 1:
        raise NotCoprime(f"budget {(b1, b2)} is not coprime")
    best = ceil_point(1, (b1, b2))
    for i in range(2, b1):
        p = ceil_point(i, (b1, b2))
        if compare_slopes(p, best) < 0:
            best = p
    return best
