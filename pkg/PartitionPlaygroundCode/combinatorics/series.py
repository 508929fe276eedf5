"""
Truncated formal power series in q with exact integer coefficients.

A Series keeps coefficients c_0..c_N; every operation discards exponents
above N. Python integers are unbounded, so partition counts never overflow.
Reciprocals are only ever of the form 1/(1 - q^d) and are built directly.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Optional, Tuple

from ..utils.errors import TruncationMismatch
from ..utils.helpers import require_non_negative, require_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Series:
    trunc: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        require_non_negative("trunc", self.trunc)
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.trunc + 1:
            raise ValueError(f"expected {self.trunc + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, 'coeffs', coeffs)

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n; 0 above the truncation."""
        return self.coeffs[n] if 0 <= n <= self.trunc else 0

    def truncate(self, trunc: int) -> 'Series':
        require_non_negative("trunc", trunc)
        if trunc > self.trunc:
            raise ValueError(f"cannot extend a series truncated at {self.trunc} to {trunc}")
        return Series(trunc, self.coeffs[:trunc + 1])

    def coefficient_table(self) -> str:
        """One ``n<TAB>coefficient`` line per exponent."""
        return "\n".join(f"{n}\t{c}" for n, c in enumerate(self.coeffs))

    def __add__(self, other: 'Series') -> 'Series':
        return add(self, other)

    def __sub__(self, other: 'Series') -> 'Series':
        return sub(self, other)

    def __mul__(self, other: 'Series') -> 'Series':
        return mul(self, other)

    def __neg__(self) -> 'Series':
        return scale(self, -1)


class SeriesComparison(NamedTuple):
    """Outcome of equal_up_to; exponent is None when the series agree."""

    equal: bool
    exponent: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None


def _check_trunc(a: Series, b: Series) -> None:
    if a.trunc != b.trunc:
        raise TruncationMismatch(a.trunc, b.trunc)


def series_zero(trunc: int) -> Series:
    return Series(trunc, (0,) * (trunc + 1))


def series_one(trunc: int) -> Series:
    return series_monomial(1, 0, trunc)


def series_monomial(a: int, e: int, trunc: int) -> Series:
    """a * q^e truncated at trunc (the zero series when e > trunc)."""
    require_non_negative("e", e)
    require_non_negative("trunc", trunc)
    coeffs = [0] * (trunc + 1)
    if e <= trunc:
        coeffs[e] = a
    return Series(trunc, tuple(coeffs))


def add(a: Series, b: Series) -> Series:
    _check_trunc(a, b)
    return Series(a.trunc, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: Series, b: Series) -> Series:
    _check_trunc(a, b)
    return Series(a.trunc, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: Series, factor: int) -> Series:
    return Series(a.trunc, tuple(factor * x for x in a.coeffs))


def mul(a: Series, b: Series) -> Series:
    """Truncated Cauchy product; zero coefficients of b are skipped."""
    _check_trunc(a, b)
    trunc = a.trunc
    support = [(j, c) for j, c in enumerate(b.coeffs) if c]
    result = [0] * (trunc + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in support:
            if i + j > trunc:
                break
            result[i + j] += x * y
    return Series(trunc, tuple(result))


def geometric_inverse_factor(d: int, trunc: int) -> Series:
    """1/(1 - q^d): ones at every multiple of d."""
    require_positive("d", d)
    require_non_negative("trunc", trunc)
    return Series(trunc, tuple(1 if n % d == 0 else 0 for n in range(trunc + 1)))


def finite_geometric_factor(j: int, c: int, trunc: int) -> Series:
    """1 + q^j + q^2j + ... + q^cj."""
    require_positive("j", j)
    require_non_negative("c", c)
    require_non_negative("trunc", trunc)
    return Series(trunc, tuple(1 if n % j == 0 and n // j <= c else 0 for n in range(trunc + 1)))


def binomial_factor(e: int, trunc: int) -> Series:
    """1 - q^e."""
    require_positive("e", e)
    return sub(series_one(trunc), series_monomial(1, e, trunc))


def product_over(j_from: int, j_to: Optional[int], factor: Callable[[int], Series], trunc: int) -> Series:
    """
    Product of factor(j) for j_from <= j <= j_to.

    ``j_to=None`` stands for an infinite product whose factor j is
    1 + O(q^j); such factors are the identity once j exceeds trunc, so the
    index is cut off there.
    """
    if j_to is None:
        j_to = trunc
    result = series_one(trunc)
    for j in range(j_from, j_to + 1):
        result = mul(result, factor(j))
    return result


def equal_up_to(a: Series, b: Series) -> SeriesComparison:
    """Compare coefficient by coefficient, reporting the first mismatch."""
    _check_trunc(a, b)
    for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return SeriesComparison(False, n, x, y)
    return SeriesComparison(True)


def partition_numbers(trunc: int) -> List[int]:
    """
    p(0), ..., p(trunc) by Euler's pentagonal recurrence.

    Independent of the product machinery, so it serves as an oracle for
    the coefficients of prod 1/(1 - q^j) beyond the enumeration cap.
    """
    require_non_negative("trunc", trunc)
    p = [1]
    for n in range(1, trunc + 1):
        total = 0
        g = 1
        while True:
            pent1 = g * (3 * g - 1) // 2
            pent2 = g * (3 * g + 1) // 2
            if pent1 > n:
                break
            sign = 1 if g % 2 else -1
            total += sign * p[n - pent1]
            if pent2 <= n:
                total += sign * p[n - pent2]
            g += 1
        p.append(total)
    return p
