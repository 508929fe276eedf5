"""
Shared fixtures and random partition generators for the test suite.
"""

import os
import random
import sys

import pytest
from hypothesis import strategies as st

# Add project root to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from PartitionPlaygroundCode.combinatorics.partition_core import Partition, from_multiplicities  # noqa: E402

EXAMPLE1 = (29, 27, 25, 21, 17, 8, 8, 5, 4, 1)
EXAMPLE2_INPUT = (10, 9, 9, 9, 8, 7, 7, 7) + (5,) * 9 + (4,) * 4 + (3,) * 4 + (2, 2, 1, 1)
EXAMPLE2_OUTPUT = (10, 9, 9, 9, 8, 7, 7, 7) + (5,) * 4 + (4,) * 4 + (3,) * 4 + (2, 2) + (1,) * 27
EXAMPLE1_PI = (24, 22, 20, 16, 12, 8, 8, 5, 4, 1)
EXAMPLE2_ALPHA = (49, 22, 20, 16, 12, 8, 8, 5, 4, 1)


partitions = st.lists(st.integers(min_value=1, max_value=30), max_size=25).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)
moduli = st.integers(min_value=1, max_value=6)


def random_partition(rng: random.Random, max_weight: int = 40) -> Partition:
    """Any partition of a random weight up to max_weight."""
    remaining = rng.randint(0, max_weight)
    parts = []
    while remaining:
        part = rng.randint(1, remaining)
        parts.append(part)
        remaining -= part
    return Partition(tuple(sorted(parts, reverse=True)))


def random_bounded_partition(rng: random.Random, k: int, max_value: int = 12) -> Partition:
    """No part repeated more than 2k-1 times."""
    return from_multiplicities({v: rng.randint(0, 2 * k - 1) for v in range(1, rng.randint(1, max_value) + 1)})


def random_initial_partition(rng: random.Random, k: int, strong: bool = False, max_value: int = 10) -> Partition:
    """Initial k-repetitions (strong: values below the top one repeated at least 2k times)."""
    top = rng.randint(0, max_value)
    floor = 2 * k if strong else k
    counts = {v: rng.randint(floor, floor + k) for v in range(1, top)}
    if top:
        counts[top] = rng.randint(k, 3 * k)
    for v in range(top + 1, top + rng.randint(0, 5) + 1):
        counts[v] = rng.randint(0, k - 1)
    return from_multiplicities(counts)


@pytest.fixture
def example1_partition():
    return Partition(EXAMPLE1)


@pytest.fixture
def example2_partition():
    return Partition(EXAMPLE2_INPUT)


@pytest.fixture
def rng():
    return random.Random(1729)
