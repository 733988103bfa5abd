"""Serializable solve reports.

JSON layout::

    {"budget": [...], "k": n, "branch": "perfect|alg1|alg2|oracle",
     "parts": [[...], ...],
     "diversity": [{"num": "..", "den": "..", "float": ..}, ...],
     "epsilon": {"num": "..", "den": "..", "float": ..},
     "trace": [{"kappa": .., "b_prime": [..], "m": .., "ell": ..}, ...],
     "duration_s": ..}

Exact rationals are written as decimal strings so consumers limited to 64-bit
numbers do not truncate them.
"""
from __future__ import annotations

import gc
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from divpart.diversity import diversity, epsilon_of_partition
from divpart.oracle import DEFAULT_GUARD, brute_force_pmd
from divpart.two_types import solve

BRANCH_ORACLE = "oracle"


def ratio_to_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator), "float": float(value)}


def ratio_from_json(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def timed(fn: Callable, *args):
    """Call ``fn(*args)`` with the garbage collector paused; return ``(result, seconds)``.

    Pausing collection mirrors :mod:`timeit` and keeps collector pauses, whose
    cost grows with the live heap, out of per-call timings.
    """
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - start
    finally:
        if enabled:
            gc.enable()
    return result, elapsed


@dataclass
class SolveReport:
    budget: tuple
    k: int
    branch: str
    parts: list
    diversities: list
    epsilon: Fraction
    trace: list = field(default_factory=list)
    duration: float = 0.0

    def __post_init__(self):
        # Never emit a report whose loss disagrees with its own parts.
        recomputed = epsilon_of_partition(self.parts, self.budget)
        if recomputed != self.epsilon:
            raise ValueError(f"inconsistent report: epsilon {self.epsilon} disagrees with parts ({recomputed})")
        if bool(self.trace) != (self.branch == "alg2"):
            raise ValueError(f"inconsistent report: trace must be present exactly for alg2, branch={self.branch}")

    def to_dict(self) -> dict:
        return {
            "budget": list(self.budget),
            "k": self.k,
            "branch": self.branch,
            "parts": [list(p) for p in self.parts],
            "diversity": [ratio_to_json(d) for d in self.diversities],
            "epsilon": ratio_to_json(self.epsilon),
            "trace": list(self.trace),
            "duration_s": self.duration,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "SolveReport":
        return cls(
            budget=tuple(data["budget"]),
            k=data["k"],
            branch=data["branch"],
            parts=[tuple(p) for p in data["parts"]],
            diversities=[ratio_from_json(d) for d in data["diversity"]],
            epsilon=ratio_from_json(data["epsilon"]),
            trace=list(data.get("trace", [])),
            duration=data.get("duration_s", 0.0),
        )

    def to_text(self) -> str:
        lines = [
            f"budget: {', '.join(map(str, self.budget))}  k: {self.k}  branch: {self.branch}",
            "parts:",
        ]
        for i, (p, d) in enumerate(zip(self.parts, self.diversities), 1):
            lines.append(f"  {i}: {tuple(p)}  D = {format_ratio(d)}")
        lines.append(f"epsilon: {format_ratio(self.epsilon)}")
        for depth, frame in enumerate(self.trace):
            lines.append(
                f"  level {depth}: kappa={frame['kappa']} b'={tuple(frame['b_prime'])} "
                f"m={frame['m']} ell={frame['ell']}"
            )
        return "\n".join(lines)


def format_float(value) -> str:
    return f"{float(value):.6g}"


def format_ratio(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator} ~ {format_float(value)}"


def solve_report(b1: int, b2: int, k: int) -> SolveReport:
    result, elapsed = timed(solve, b1, b2, k)
    return SolveReport(
        budget=tuple(result.budget),
        k=k,
        branch=result.branch,
        parts=result.parts,
        diversities=result.diversities,
        epsilon=result.epsilon,
        trace=[frame.as_dict() for frame in result.trace],
        duration=elapsed,
    )


def oracle_report(
    b: Sequence[int], k: int, guard: int = DEFAULT_GUARD, method: str = "auto"
) -> SolveReport:
    (epsilon, parts), elapsed = timed(brute_force_pmd, b, k, guard, method)
    return SolveReport(
        budget=tuple(b),
        k=k,
        branch=BRANCH_ORACLE,
        parts=parts,
        diversities=[diversity(p) for p in parts],
        epsilon=epsilon,
        duration=elapsed,
    )
