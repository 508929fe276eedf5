"""
Partition Core - canonical partition values and class predicates

Partitions are stored as weakly decreasing tuples of positive integers and
indexed from 1 in that order. Every predicate treats the empty partition as
satisfying it vacuously.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from ..utils.errors import NotAPartition, PartitionSyntaxError
from ..utils.helpers import require_positive

logger = logging.getLogger(__name__)

# Runs at least this long are written as a^m by format_partition
RUN_COMPRESSION_THRESHOLD = 4


@dataclass(frozen=True)
class Partition:
    """An integer partition; construction validates the ordering."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = self.parts
        if not isinstance(parts, tuple):
            parts = tuple(parts)
            object.__setattr__(self, 'parts', parts)
        for index, value in enumerate(parts):
            if isinstance(value, bool) or not isinstance(value, int):
                raise NotAPartition(index, value, "part is not an integer")
            if value < 1:
                raise NotAPartition(index, value, "part is not positive")
            if index + 1 < len(parts) and parts[index + 1] > value:
                raise NotAPartition(index, value, f"part is smaller than the next part {parts[index + 1]}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """1-based part access; positions past the end read as 0."""
        if i < 1:
            raise IndexError(f"parts are indexed from 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def make_partition(parts: Iterable[int]) -> Partition:
    """Build a Partition from any finite integer sequence, validating order and sign."""
    return Partition(tuple(parts))


def conjugate(p: Partition) -> Partition:
    """Transpose the Ferrers diagram: part i of the result counts parts of p that are >= i."""
    counts = []
    length = len(p.parts)
    for i in range(1, p.largest + 1):
        while length and p.parts[length - 1] < i:
            length -= 1
        counts.append(length)
    return Partition(tuple(counts))


def multiplicities(p: Partition) -> Dict[int, int]:
    """Map each part value to the number of times it occurs."""
    return dict(Counter(p.parts))


def multiplicity(p: Partition, j: int) -> int:
    require_positive("j", j)
    return p.parts.count(j)


def from_multiplicities(counts: Mapping[int, int]) -> Partition:
    """Inverse of multiplicities(); zero counts are skipped."""
    parts: List[int] = []
    for value in sorted(counts, reverse=True):
        parts.extend([value] * counts[value])
    return Partition(tuple(parts))


def is_repetition_bounded(p: Partition, k: int) -> bool:
    """True iff no part is repeated more than 2k-1 times."""
    require_positive("k", k)
    return all(count <= 2 * k - 1 for count in Counter(p.parts).values())


def largest_k_repeated_part(p: Partition, k: int) -> int:
    """Largest part value occurring at least k times; 0 if there is none."""
    require_positive("k", k)
    counts = Counter(p.parts)
    return max((value for value, count in counts.items() if count >= k), default=0)


def first_deficient_value(p: Partition, k: int, threshold: int) -> Tuple[int, int]:
    """
    Locate the first failure of an initial-repetition condition.

    Returns (j, v) where j is the largest k-repeated part and v is the smallest
    value below j whose multiplicity is under ``threshold``; (0, 0) if none.
    """
    counts = Counter(p.parts)
    top = max((value for value, count in counts.items() if count >= k), default=0)
    for value in range(1, top):
        if counts.get(value, 0) < threshold:
            return top, value
    return 0, 0


def has_initial_k_repetitions(p: Partition, k: int) -> bool:
    """If any j appears at least k times, every smaller value also appears at least k times."""
    require_positive("k", k)
    return first_deficient_value(p, k, k) == (0, 0)


def has_strong_initial_repetitions(p: Partition, k: int) -> bool:
    """If any j appears at least k times, every smaller value appears at least 2k times."""
    require_positive("k", k)
    return first_deficient_value(p, k, 2 * k) == (0, 0)


def is_k_flat(p: Partition, k: int) -> bool:
    """All adjacent gaps, the smallest part against 0 included, are below k."""
    require_positive("k", k)
    padded = p.parts + (0,)
    return all(padded[i] - padded[i + 1] < k for i in range(len(p.parts)))


# Text format


def parse_partition(text: str) -> Partition:
    """
    Parse ``29,27,25`` or ``5^9,4^4``; blank text is the empty partition.

    Raises PartitionSyntaxError for malformed tokens and NotAPartition when
    the expanded parts are not weakly decreasing.
    """
    if text is None or not text.strip():
        return EMPTY

    parts: List[int] = []
    for raw_token in text.split(','):
        token = raw_token.strip()
        if not token:
            raise PartitionSyntaxError(raw_token, "empty entry")
        value_text, caret, count_text = token.partition('^')
        try:
            value = int(value_text.strip())
        except ValueError:
            raise PartitionSyntaxError(token, "part is not an integer") from None
        count = 1
        if caret:
            try:
                count = int(count_text.strip())
            except ValueError:
                raise PartitionSyntaxError(token, "exponent is not an integer") from None
            if count < 1:
                raise PartitionSyntaxError(token, "exponent must be at least 1")
        parts.extend([value] * count)

    return make_partition(parts)


def format_partition(p: Partition) -> str:
    """Canonical comma list, compressing long runs as a^m."""
    tokens = []
    parts = p.parts
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        if run >= RUN_COMPRESSION_THRESHOLD:
            tokens.append(f"{parts[i]}^{run}")
        else:
            tokens.extend(str(parts[i]) for _ in range(run))
        i = j
    return ",".join(tokens)
