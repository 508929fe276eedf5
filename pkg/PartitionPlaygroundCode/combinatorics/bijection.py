"""
Bijection between repetition-bounded partitions and partitions with
initial k-repetitions.

Forward map:
1. Conjugate lambda, obtaining lambda'.
2. Remove all k-strips from lambda', obtaining (pi, delta).
3. Add pi and delta componentwise, obtaining alpha.
4. Conjugate alpha.

The four steps are total; ``strict`` only controls whether the input must
lie in the class the theorem is about.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from .partition_core import (
    EMPTY,
    Partition,
    conjugate,
    first_deficient_value,
    from_multiplicities,
    is_repetition_bounded,
    make_partition,
)
from .strips import StripDecomposition, decompose, insert_strips, vector_add
from ..utils.errors import DomainViolation
from ..utils.helpers import require_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BijectionTrace:
    """Every intermediate object of the forward map."""

    k: int
    lambda_: Partition = EMPTY
    lambda_conj: Partition = EMPTY
    pi: Partition = EMPTY
    delta: Partition = EMPTY
    alpha: Partition = EMPTY
    alpha_conj: Partition = EMPTY


def _check_repetition_bounded(lam: Partition, k: int) -> None:
    if is_repetition_bounded(lam, k):
        return
    counts = Counter(lam.parts)
    part = min(value for value, count in counts.items() if count >= 2 * k)
    raise DomainViolation(
        f"part {part} occurs {counts[part]} times; at most {2 * k - 1} allowed for k = {k}",
        part=part,
    )


def _check_initial_repetitions(beta: Partition, k: int) -> None:
    top, deficient = first_deficient_value(beta, k, k)
    if not top:
        return
    count = beta.parts.count(deficient)
    raise DomainViolation(
        f"part {top} occurs at least {k} times but {deficient} occurs only {count} times",
        part=top,
        deficient=deficient,
    )


def trace(lam: Partition, k: int) -> BijectionTrace:
    """
    Run the four steps of the forward map and keep every intermediate.

    No domain check is made; forward() decides whether to enforce one.

    Args:
        lam: Partition to map
        k: Modulus, at least 1

    Returns:
        BijectionTrace from lambda through alpha'
    """
    require_positive("k", k)
    lambda_conj = conjugate(lam)
    decomposition = decompose(lambda_conj, k)
    alpha = vector_add(decomposition.pi, decomposition.delta)
    return BijectionTrace(
        k=k,
        lambda_=lam,
        lambda_conj=lambda_conj,
        pi=decomposition.pi,
        delta=decomposition.delta,
        alpha=alpha,
        alpha_conj=conjugate(alpha),
    )


def forward(lam: Partition, k: int, strict: bool = True) -> Partition:
    """
    Image of lambda under the map.

    Raises DomainViolation when ``strict`` and some part occurs 2k or more times.
    """
    require_positive("k", k)
    if strict:
        _check_repetition_bounded(lam, k)
    result = trace(lam, k).alpha_conj
    logger.debug(f"forward k={k}: ({lam}) -> ({result})")
    return result


def split_multiplicities(beta: Partition, k: int) -> StripDecomposition:
    """
    Split beta into the k-flat pi and the strip record delta.

    delta_i = k * (sum over t >= i of floor(mult_t / k)); what remains after
    reducing every multiplicity mod k is the conjugate of pi.
    """
    counts = Counter(beta.parts)
    quotients = {value: count // k for value, count in counts.items()}

    delta = []
    running = 0
    for i in range(beta.largest, 0, -1):
        running += quotients.get(i, 0)
        if running:
            delta.append(k * running)
    delta.reverse()

    remainder = from_multiplicities({value: count % k for value, count in counts.items()})
    return StripDecomposition(k=k, pi=conjugate(remainder), delta=make_partition(delta))


def inverse(beta: Partition, k: int, strict: bool = True) -> Partition:
    """
    Preimage of beta: strip off delta via multiplicity quotients, insert the
    strips into pi, conjugate.

    Raises DomainViolation when ``strict`` and beta lacks initial k-repetitions.
    """
    require_positive("k", k)
    if strict:
        _check_initial_repetitions(beta, k)
    decomposition = split_multiplicities(beta, k)
    result = conjugate(insert_strips(decomposition))
    logger.debug(f"inverse k={k}: ({beta}) -> ({result})")
    return result


def inverse_by_gaps(beta: Partition, k: int) -> Partition:
    """
    Independent inverse used for cross-checks.

    Splits each gap of alpha = beta' into (gap mod k) for pi and
    k * floor(gap / k) for delta, then reinserts the strips.
    """
    require_positive("k", k)
    alpha = conjugate(beta)
    m = len(alpha)
    delta = [0] * m
    running = 0
    for i in range(m, 0, -1):
        running += k * ((alpha.part(i) - alpha.part(i + 1)) // k)
        delta[i - 1] = running
    pi = [alpha.part(i) - delta[i - 1] for i in range(1, m + 1)]
    decomposition = StripDecomposition(
        k=k,
        pi=make_partition(part for part in pi if part > 0),
        delta=make_partition(part for part in delta if part > 0),
    )
    return conjugate(insert_strips(decomposition))
