"""
k-strips and the (pi, delta) decomposition

A k-strip of length i is removable when part i exceeds part i+1 by at least
k (with the part after the last read as 0). Removing every strip leaves a
k-flat partition pi; delta records one part k*i per removed strip of
length i.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .partition_core import EMPTY, Partition, is_k_flat, make_partition
from ..utils.errors import MalformedDecomposition, StripNotRemovable
from ..utils.helpers import require_positive

logger = logging.getLogger(__name__)

# Picks one (length, count) entry out of removable_strips output
StripChooser = Callable[[Sequence[Tuple[int, int]]], Tuple[int, int]]


@dataclass(frozen=True)
class StripDecomposition:
    k: int
    pi: Partition = EMPTY
    delta: Partition = EMPTY

    @property
    def weight(self) -> int:
        return self.pi.weight + self.delta.weight

    @property
    def strip_lengths(self) -> Tuple[int, ...]:
        return tuple(part // self.k for part in self.delta.parts)


def _gap(p: Partition, i: int) -> int:
    return p.part(i) - p.part(i + 1)


def removable_strips(p: Partition, k: int) -> List[Tuple[int, int]]:
    """(length, count) for every position with a removable strip, shortest first."""
    require_positive("k", k)
    strips = []
    for i in range(1, len(p) + 1):
        count = _gap(p, i) // k
        if count > 0:
            strips.append((i, count))
    return strips


def strip_count(p: Partition, k: int) -> int:
    """
    Total number of removable k-strips, counting repeats at one position.

    Args:
        p: Partition to inspect
        k: Strip width

    Returns:
        Sum of floor(gap_i / k) over all positions i
    """
    return sum(count for _, count in removable_strips(p, k))


def remove_strip(p: Partition, k: int, i: int) -> Partition:
    """Subtract k from parts 1..i; parts reduced to 0 are dropped."""
    require_positive("k", k)
    gap = _gap(p, i) if 1 <= i <= len(p) else 0
    if not 1 <= i <= len(p) or gap < k:
        raise StripNotRemovable(i, gap, k)
    reduced = [part - k for part in p.parts[:i]] + list(p.parts[i:])
    return make_partition(part for part in reduced if part > 0)


def _longest_first(strips: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    return strips[-1]


def decompose_in_order(p: Partition, k: int, choose: StripChooser) -> StripDecomposition:
    """Remove strips one at a time in the order ``choose`` dictates until p is k-flat."""
    require_positive("k", k)
    removed = []
    current = p
    strips = removable_strips(current, k)
    while strips:
        length, _ = choose(strips)
        current = remove_strip(current, k, length)
        removed.append(k * length)
        logger.debug(f"Removed {k}-strip of length {length}")
        strips = removable_strips(current, k)
    return StripDecomposition(k=k, pi=current, delta=make_partition(sorted(removed, reverse=True)))


def decompose(p: Partition, k: int) -> StripDecomposition:
    """Canonical decomposition: always remove the longest removable strip."""
    return decompose_in_order(p, k, _longest_first)


def _validate(d: StripDecomposition) -> None:
    require_positive("k", d.k)
    bad = [part for part in d.delta.parts if part % d.k]
    if bad:
        raise MalformedDecomposition(f"delta part {bad[0]} is not a multiple of k = {d.k}")
    if not is_k_flat(d.pi, d.k):
        raise MalformedDecomposition(f"pi = ({d.pi}) is not {d.k}-flat")


def insert_strips(d: StripDecomposition) -> Partition:
    """Add every recorded strip back into pi, longest strips first; inverse of decompose."""
    _validate(d)
    parts = list(d.pi.parts)
    for length in d.strip_lengths:
        if length > len(parts):
            parts.extend([0] * (length - len(parts)))
        for i in range(length):
            parts[i] += d.k
    return make_partition(parts)


def vector_add(pi: Partition, delta: Partition) -> Partition:
    """Componentwise sum, the shorter partition padded with zeros."""
    size = max(len(pi), len(delta))
    return make_partition(pi.part(i) + delta.part(i) for i in range(1, size + 1))
