"""
Identities - generating-function sides and brute-force class counts

Builds both sides of the three q-series identities tied to the bijection,
enumerates partitions as an oracle, and verifies that every form agrees
with the others and with the enumerated class counts.

Identity 1: initial k-repetitions (lhs) vs parts repeated at most 2k-1 times (rhs).
Identity 2: identity 1 finitized to largest k-repeated part at most m.
Identity 3: the strong variant (lower parts repeated at least 2k times),
            carried through to the first Rogers-Ramanujan product.
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Iterator, Optional, Tuple

from .partition_core import (
    Partition,
    conjugate,
    has_initial_k_repetitions,
    has_strong_initial_repetitions,
    is_k_flat,
    is_repetition_bounded,
    largest_k_repeated_part,
)
from .series import (
    Series,
    binomial_factor,
    equal_up_to,
    finite_geometric_factor,
    geometric_inverse_factor,
    mul,
    product_over,
    series_monomial,
    series_one,
    series_zero,
)
from .strips import strip_count
from ..config import get_config
from ..utils.errors import CapExceeded, InvalidParameter
from ..utils.helpers import require_non_negative, require_positive

logger = logging.getLogger(__name__)


class PartitionClass(str, Enum):
    REPETITION_BOUNDED = "repetition-bounded"
    INITIAL_REPS = "initial-reps"
    INITIAL_REPS_CAPPED = "initial-reps-capped"
    STRONG_INITIAL_REPS = "strong-initial-reps"
    K_FLAT_CONJUGATE = "k-flat-conjugate"
    STRIP_CAPPED = "strip-capped"

    @property
    def needs_m(self) -> bool:
        return self in (PartitionClass.INITIAL_REPS_CAPPED, PartitionClass.STRIP_CAPPED)


# Enumeration oracle


def _enumeration_cap(cap: Optional[int]) -> int:
    # an explicit cap may tighten the configured limit, never raise it
    limit = get_config().enumeration_cap
    return limit if cap is None else min(cap, limit)


def _generate(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


def iter_partitions(n: int, cap: Optional[int] = None) -> Iterator[Partition]:
    """
    Stream every partition of n once, in lexicographically decreasing order.

    Args:
        n: Weight to enumerate
        cap: Optional tighter bound than the configured enumeration cap

    Raises:
        CapExceeded: n is above the effective cap
    """
    require_non_negative("n", n)
    limit = _enumeration_cap(cap)
    if n > limit:
        raise CapExceeded(n, limit)
    return (Partition(parts) for parts in _generate(n, n))


def enumerate_partitions(n: int, cap: Optional[int] = None) -> Tuple[Partition, ...]:
    """Every partition of n as a tuple; nothing is cached between calls."""
    return tuple(iter_partitions(n, cap))


def class_predicate(partition_class: PartitionClass, k: int, m: Optional[int] = None):
    """Return the membership test for a named class at modulus k."""
    require_positive("k", k)
    partition_class = PartitionClass(partition_class)
    if partition_class.needs_m:
        if m is None:
            raise InvalidParameter(f"class {partition_class.value} requires m")
        require_non_negative("m", m)

    if partition_class is PartitionClass.REPETITION_BOUNDED:
        return lambda p: is_repetition_bounded(p, k)
    if partition_class is PartitionClass.INITIAL_REPS:
        return lambda p: has_initial_k_repetitions(p, k)
    if partition_class is PartitionClass.INITIAL_REPS_CAPPED:
        return lambda p: has_initial_k_repetitions(p, k) and largest_k_repeated_part(p, k) <= m
    if partition_class is PartitionClass.STRONG_INITIAL_REPS:
        return lambda p: has_strong_initial_repetitions(p, k)
    if partition_class is PartitionClass.K_FLAT_CONJUGATE:
        return lambda p: is_k_flat(conjugate(p), k)
    return lambda p: is_repetition_bounded(p, k) and strip_count(conjugate(p), k) <= m


def count_class(n: int, k: int, partition_class: PartitionClass, m: Optional[int] = None,
                cap: Optional[int] = None) -> int:
    predicate = class_predicate(partition_class, k, m)
    return sum(1 for p in iter_partitions(n, cap) if predicate(p))


# Series builders


def initial_exponent(k: int, n: int) -> int:
    """k*1 + k*2 + ... + k*n."""
    return k * n * (n + 1) // 2


def strong_exponent(k: int, n: int) -> int:
    """k*n + 2k*(n-1) + ... + 2k*1, summed literally; equals k*n^2."""
    if n == 0:
        return 0
    return k * n + sum(2 * k * i for i in range(1, n))


def _k_flat_product(k: int, trunc: int, j_from: int = 1) -> Series:
    # prod_{j >= j_from} (1 - q^{jk}) / (1 - q^j) = prod (1 + q^j + ... + q^{(k-1)j})
    return product_over(j_from, None, lambda j: finite_geometric_factor(j, k - 1, trunc), trunc)


def _inverse_product(step: int, n: int, trunc: int) -> Series:
    # 1 / ((1 - q^step)(1 - q^{2 step}) ... (1 - q^{n step}))
    return product_over(1, n, lambda i: geometric_inverse_factor(i * step, trunc), trunc)


def _largest_index(exponent, k: int, trunc: int) -> int:
    n = 0
    while exponent(k, n + 1) <= trunc:
        n += 1
    return n


def _repetition_sum(k: int, n_max: int, trunc: int, exponent) -> Series:
    """sum_{n <= n_max} q^{exponent(k, n)} / (q;q)_n * prod_{j > n} (1 + ... + q^{(k-1)j})."""
    total = series_zero(trunc)
    for n in range(n_max + 1):
        term = mul(series_monomial(1, exponent(k, n), trunc), _inverse_product(1, n, trunc))
        term = mul(term, _k_flat_product(k, trunc, j_from=n + 1))
        total = total + term
    return total


def _strip_sum(k: int, n_max: int, trunc: int, exponent) -> Series:
    """sum_{n <= n_max} q^{exponent(k, n)} / (q^k;q^k)_n."""
    total = series_zero(trunc)
    for n in range(n_max + 1):
        total = total + mul(series_monomial(1, exponent(k, n), trunc), _inverse_product(k, n, trunc))
    return total


def identity1_sides(k: int, trunc: int) -> Tuple[Series, Series]:
    require_positive("k", k)
    require_non_negative("trunc", trunc)
    n_max = _largest_index(initial_exponent, k, trunc)
    lhs = _repetition_sum(k, n_max, trunc, initial_exponent)
    rhs = product_over(1, None, lambda j: finite_geometric_factor(j, 2 * k - 1, trunc), trunc)
    logger.info(f"Built identity 1 sides for k={k}, N={trunc} ({n_max + 1} sum terms)")
    return lhs, rhs


def identity2_sides(k: int, m: int, trunc: int) -> Tuple[Series, Series]:
    require_positive("k", k)
    require_non_negative("m", m)
    require_non_negative("trunc", trunc)
    n_max = min(m, _largest_index(initial_exponent, k, trunc))
    lhs = _repetition_sum(k, n_max, trunc, initial_exponent)
    rhs = mul(_k_flat_product(k, trunc), _strip_sum(k, n_max, trunc, initial_exponent))
    logger.info(f"Built identity 2 sides for k={k}, m={m}, N={trunc}")
    return lhs, rhs


def _rogers_ramanujan_product(k: int, trunc: int) -> Series:
    # prod_{t >= 0} 1 / ((1 - q^{k(5t+1)})(1 - q^{k(5t+4)}))
    result = series_one(trunc)
    for residue in (1, 4):
        t = 0
        while k * (5 * t + residue) <= trunc:
            result = mul(result, geometric_inverse_factor(k * (5 * t + residue), trunc))
            t += 1
    return result


def _final_product(k: int, trunc: int) -> Series:
    # prod_{j >= 1} 1/(1 - q^j) * prod (1 - q^{5jk}) (j >= 1), (1 - q^{k(5j+2)})(1 - q^{k(5j+3)}) (j >= 0)
    result = product_over(1, None, lambda j: geometric_inverse_factor(j, trunc), trunc)
    j = 1
    while 5 * j * k <= trunc:
        result = mul(result, binomial_factor(5 * j * k, trunc))
        j += 1
    for residue in (2, 3):
        j = 0
        while k * (5 * j + residue) <= trunc:
            result = mul(result, binomial_factor(k * (5 * j + residue), trunc))
            j += 1
    return result


def identity3_forms(k: int, trunc: int) -> Dict[str, Series]:
    """The four forms of identity 3, keyed sum, middle, rr_product, final_product."""
    require_positive("k", k)
    require_non_negative("trunc", trunc)
    n_max = _largest_index(strong_exponent, k, trunc)
    k_flat = _k_flat_product(k, trunc)
    forms = {
        "sum": _repetition_sum(k, n_max, trunc, strong_exponent),
        "middle": mul(k_flat, _strip_sum(k, n_max, trunc, strong_exponent)),
        "rr_product": mul(k_flat, _rogers_ramanujan_product(k, trunc)),
        "final_product": _final_product(k, trunc),
    }
    logger.info(f"Built identity 3 forms for k={k}, N={trunc}")
    return forms


# Verification

FORM_DESCRIPTIONS = {
    1: {
        "lhs": "sum_n q^(k n(n+1)/2) / (q;q)_n * prod_{j>n} (1 + q^j + ... + q^((k-1)j))",
        "rhs": "prod_{j>=1} (1 + q^j + ... + q^((2k-1)j))",
    },
    2: {
        "lhs": "sum_{n<=m} q^(k n(n+1)/2) / (q;q)_n * prod_{j>n} (1 + q^j + ... + q^((k-1)j))",
        "rhs": "prod_{j>=1} (1-q^(jk))/(1-q^j) * sum_{n<=m} q^(k n(n+1)/2) / (q^k;q^k)_n",
    },
    3: {
        "sum": "sum_n q^(k n^2) / (q;q)_n * prod_{j>n} (1 + q^j + ... + q^((k-1)j))",
        "middle": "prod_{j>=1} (1-q^(jk))/(1-q^j) * sum_n q^(k n^2) / (q^k;q^k)_n",
        "rr_product": "prod_{j>=1} (1-q^(jk))/(1-q^j) * prod_{t>=0} 1/((1-q^(k(5t+1)))(1-q^(k(5t+4))))",
        "final_product": "prod_{j>=1} (1-q^(5jk)) * prod_{j>=0} (1-q^(k(5j+2)))(1-q^(k(5j+3))) / prod_{j>=1} (1-q^j)",
    },
}

# form name -> class whose counts its coefficients must equal
ORACLE_CLASSES = {
    1: {"lhs": PartitionClass.INITIAL_REPS, "rhs": PartitionClass.REPETITION_BOUNDED},
    2: {"lhs": PartitionClass.INITIAL_REPS_CAPPED, "rhs": PartitionClass.STRIP_CAPPED},
    3: {"sum": PartitionClass.STRONG_INITIAL_REPS},
}


@dataclass
class IdentityReport:
    identity: int
    k: int
    m: Optional[int]
    trunc: int
    forms: Dict[str, str] = field(default_factory=dict)
    equal: bool = True
    mismatch: Optional[Dict[str, Any]] = None
    oracle_checked_up_to: int = -1
    oracle_mismatch: Optional[Dict[str, Any]] = None
    series: Dict[str, Series] = field(default_factory=dict, repr=False, compare=False)

    @property
    def holds(self) -> bool:
        return self.equal and self.oracle_mismatch is None

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(replace(self, series={}))
        del data["series"]
        data["holds"] = self.holds
        return data


def build_forms(identity: int, k: int, m: Optional[int], trunc: int) -> Dict[str, Series]:
    if identity == 1:
        lhs, rhs = identity1_sides(k, trunc)
        return {"lhs": lhs, "rhs": rhs}
    if identity == 2:
        if m is None:
            raise InvalidParameter("identity 2 requires m")
        lhs, rhs = identity2_sides(k, m, trunc)
        return {"lhs": lhs, "rhs": rhs}
    if identity == 3:
        return identity3_forms(k, trunc)
    raise InvalidParameter(f"identity must be 1, 2 or 3, got {identity!r}")


def verify(identity: int, k: int, m: Optional[int], trunc: int,
           oracle_cap: Optional[int] = None) -> IdentityReport:
    """
    Build every form of an identity, compare them pairwise against the first
    form, then cross-check coefficients against enumerated class counts for
    n <= min(trunc, oracle_cap).

    The built series are kept on the report under ``series``.

    Raises:
        CapExceeded: oracle_cap is above the configured enumeration cap
    """
    config = get_config()
    cap = config.oracle_cap if oracle_cap is None else oracle_cap
    if cap > config.enumeration_cap:
        raise CapExceeded(cap, config.enumeration_cap)

    forms = build_forms(identity, k, m, trunc)
    report = IdentityReport(
        identity=identity,
        k=k,
        m=m if identity == 2 else None,
        trunc=trunc,
        forms=dict(FORM_DESCRIPTIONS[identity]),
        series=forms,
    )

    names = list(forms)
    reference = names[0]
    for name in names[1:]:
        comparison = equal_up_to(forms[reference], forms[name])
        if not comparison.equal:
            report.equal = False
            report.mismatch = {
                "exponent": comparison.exponent,
                "left_form": reference,
                "right_form": name,
                "left": comparison.left,
                "right": comparison.right,
            }
            logger.warning(f"Identity {identity} forms {reference} and {name} differ at q^{comparison.exponent}")
            break

    limit = min(trunc, cap)
    for n in range(limit + 1):
        for name, partition_class in ORACLE_CLASSES[identity].items():
            count = count_class(n, k, partition_class, m, cap=cap)
            coefficient = forms[name].coefficient(n)
            if coefficient != count:
                report.oracle_mismatch = {
                    "form": name,
                    "class": partition_class.value,
                    "exponent": n,
                    "coefficient": coefficient,
                    "count": count,
                }
                logger.warning(f"Identity {identity} form {name} disagrees with {partition_class.value} at n={n}")
                return report
        report.oracle_checked_up_to = n

    logger.info(f"Identity {identity} checked for k={k} up to q^{trunc} "
                f"(oracle to n={report.oracle_checked_up_to}, forms equal: {report.equal})")
    return report
