"""Timing harness for the two-type solver."""
from __future__ import annotations

import csv
import random
import statistics
from dataclasses import astuple, dataclass, fields
from math import gcd
from typing import Iterable, TextIO

from divpart.report import timed
from divpart.two_types import solve


@dataclass
class BenchRow:
    trial: int
    bits: int
    b1: int
    b2: int
    k: int
    branch: str
    seconds: float


def random_coprime_budget(rng: random.Random, bits: int, min_b1: int = 2) -> tuple[int, int]:
    """Coprime ``(b1, b2)`` with ``b2`` of exactly ``bits`` bits and ``min_b1 <= b1 < b2``."""
    lo, hi = 1 << (bits - 1), 1 << bits
    if hi - 1 <= min_b1:
        raise ValueError(f"{bits}-bit budgets cannot accommodate b1 >= {min_b1}")
    while True:
        b2 = rng.randrange(max(lo, min_b1 + 1), hi)
        b1 = rng.randrange(min_b1, b2)
        if gcd(b1, b2) == 1:
            return b1, b2


def run_bench(max_bits: int, k_max: int, trials: int, seed: int = 0) -> list[BenchRow]:
    if max_bits < 2 or k_max < 2 or trials < 1:
        raise ValueError("need max_bits >= 2, k_max >= 2 and trials >= 1")
    rng = random.Random(seed)
    rows = []
    for trial in range(trials):
        k = rng.randint(2, k_max)
        b1, b2 = random_coprime_budget(rng, max_bits, min_b1=k)
        result, seconds = timed(solve, b1, b2, k)
        rows.append(BenchRow(trial, max_bits, b1, b2, k, result.branch, seconds))
    return rows


def median_seconds(b1: int, b2: int, k: int, trials: int) -> float:
    return statistics.median(timed(solve, b1, b2, k)[1] for _ in range(trials))


def write_csv(rows: Iterable[BenchRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([f.name for f in fields(BenchRow)])
    for row in rows:
        writer.writerow(astuple(row))
