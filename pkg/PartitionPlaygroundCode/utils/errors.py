"""
Exception hierarchy for the partition playground.

Library code raises these; only the command line layer turns them into
exit codes and user-facing messages.
"""

from typing import Optional


class PartitionPlaygroundError(ValueError):
    """Base class for every error raised by the package."""


class NotAPartition(PartitionPlaygroundError):
    """A part sequence is not weakly decreasing and strictly positive."""

    def __init__(self, index: int, value, reason: str):
        self.index = index
        self.value = value
        self.reason = reason
        super().__init__(f"not a partition: {reason} at index {index} (value {value!r})")


class PartitionSyntaxError(PartitionPlaygroundError):
    """Partition text could not be tokenised."""

    def __init__(self, token: str, reason: str):
        self.token = token
        self.reason = reason
        super().__init__(f"cannot parse partition token {token!r}: {reason}")


class StripNotRemovable(PartitionPlaygroundError):
    def __init__(self, length: int, gap: int, k: int):
        self.length = length
        self.gap = gap
        self.k = k
        super().__init__(
            f"no removable {k}-strip of length {length}: gap is {gap}, needs at least {k}"
        )


class MalformedDecomposition(PartitionPlaygroundError):
    """A (pi, delta) pair violates the decomposition invariants."""


class DomainViolation(PartitionPlaygroundError):
    """
    Input lies outside the strict domain of the bijection.

    ``part`` is the offending part value. For the inverse map ``deficient``
    names the smaller value whose multiplicity is too low.
    """

    def __init__(self, message: str, part: int, deficient: Optional[int] = None):
        self.part = part
        self.deficient = deficient
        super().__init__(message)


class TruncationMismatch(PartitionPlaygroundError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"series truncations differ: {left} != {right}")


class CapExceeded(PartitionPlaygroundError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"n = {n} exceeds the enumeration cap {cap}")


class InvalidParameter(PartitionPlaygroundError):
    """A numeric parameter (k, m, N, ...) is out of range."""
