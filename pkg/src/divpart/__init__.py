"""Partition integer type-count vectors while preserving Simpson diversity."""

__version__ = "0.1.0"

from divpart.diversity import (  # noqa: E402
    DiversityValue,
    compare_diversity,
    diversity,
    epsilon_of_partition,
    hill_number,
    simpson_index,
    squared_cos_angle_with_ones,
)
from divpart.oracle import brute_force_pmd, enumerate_k_partitions  # noqa: E402
from divpart.perfect import build_perfect_partition, max_perfect_parts  # noqa: E402
from divpart.two_types import PartitionResult, solve, split_two  # noqa: E402

__all__ = [
    "DiversityValue",
    "PartitionResult",
    "brute_force_pmd",
    "build_perfect_partition",
    "compare_diversity",
    "diversity",
    "enumerate_k_partitions",
    "epsilon_of_partition",
    "hill_number",
    "max_perfect_parts",
    "simpson_index",
    "solve",
    "split_two",
    "squared_cos_angle_with_ones",
]
