"""
Exhaustive selftest harness

Sweeps every partition of n <= max_n for every k <= max_k and checks the
bijection, the strip decomposition and the identity oracles. Per-n sweeps
are independent; with several workers they run in a process pool and are
merged in n order, so tallies and counterexamples do not depend on
scheduling.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import repeat
from typing import Any, Dict, List, Optional

from . import bijection, identities
from .partition_core import (
    Partition,
    format_partition,
    from_multiplicities,
    has_initial_k_repetitions,
    is_repetition_bounded,
)
from .strips import decompose, decompose_in_order
from ..config import get_config
from ..utils.errors import InvalidParameter, PartitionPlaygroundError

logger = logging.getLogger(__name__)

CHECKS = ("roundtrip", "equinumerosity", "order_invariance", "nonstrict", "random_roundtrip", "oracle")

# Sweep-level checks, run once after the per-weight sweeps
GLOBAL_CHECKS = ("random_roundtrip", "oracle")

# Caps m checked for the finitized identity
CAPPED_M_VALUES = (0, 1, 2)


@dataclass
class CheckTally:
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    def record(self, ok: bool, n: int, k: int, partition: Optional[Partition] = None, detail: str = "") -> None:
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = {
                "n": n,
                "k": k,
                "partition": format_partition(partition) if partition is not None else None,
                "detail": detail,
            }

    def merge(self, other: 'CheckTally') -> None:
        self.cases += other.cases
        self.failures += other.failures
        if self.counterexample is None:
            self.counterexample = other.counterexample


@dataclass
class SelftestReport:
    max_n: int
    max_k: int
    seed: int
    checks: Dict[str, CheckTally] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(tally.failures == 0 for tally in self.checks.values())

    def tally_lines(self) -> List[str]:
        lines = []
        for tally in self.checks.values():
            status = "ok" if tally.failures == 0 else "FAIL"
            lines.append(f"{tally.name:<18}{tally.cases:>10} cases {tally.failures:>6} failures  {status}")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def _safe(check, *args):
    """Run a check; library errors count as failures with their message as detail."""
    try:
        return check(*args)
    except PartitionPlaygroundError as e:
        return False, str(e)


def _roundtrip(lam: Partition, k: int):
    beta = bijection.forward(lam, k)
    if beta.weight != lam.weight:
        return False, f"weight changed to {beta.weight}"
    if not has_initial_k_repetitions(beta, k):
        return False, f"image ({beta}) lacks initial {k}-repetitions"
    back = bijection.inverse(beta, k)
    if back != lam:
        return False, f"inverse gave ({back})"
    return True, ""


def _dual_roundtrip(beta: Partition, k: int):
    lam = bijection.inverse(beta, k)
    if not is_repetition_bounded(lam, k):
        return False, f"preimage ({lam}) is not repetition-bounded"
    image = bijection.forward(lam, k)
    if image != beta:
        return False, f"forward of the preimage gave ({image})"
    return True, ""


def _nonstrict(lam: Partition, k: int):
    beta = bijection.forward(lam, k, strict=False)
    back = bijection.inverse(beta, k, strict=False)
    if back != lam:
        return False, f"lax inverse gave ({back})"
    by_gaps = bijection.inverse_by_gaps(beta, k)
    if by_gaps != lam:
        return False, f"gap-splitting inverse gave ({by_gaps})"
    return True, ""


def _order_invariance(lam: Partition, k: int, rng: random.Random):
    canonical = decompose(lam, k)
    shuffled = decompose_in_order(lam, k, rng.choice)
    if (shuffled.pi, shuffled.delta) != (canonical.pi, canonical.delta):
        return False, f"random order gave pi=({shuffled.pi}) delta=({shuffled.delta})"
    return True, ""


def _check_weight(n: int, max_k: int, seed: int) -> Dict[str, CheckTally]:
    """All bijection and strip checks for partitions of n."""
    tallies = {name: CheckTally(name) for name in CHECKS if name not in GLOBAL_CHECKS}
    partitions = identities.enumerate_partitions(n, cap=n)

    for k in range(1, max_k + 1):
        rng = random.Random(seed * 1_000_003 + n * 101 + k)
        bounded = [p for p in partitions if is_repetition_bounded(p, k)]
        initial = [p for p in partitions if has_initial_k_repetitions(p, k)]

        for lam in bounded:
            ok, detail = _safe(_roundtrip, lam, k)
            tallies["roundtrip"].record(ok, n, k, lam, detail)
        for beta in initial:
            ok, detail = _safe(_dual_roundtrip, beta, k)
            tallies["roundtrip"].record(ok, n, k, beta, detail)

        images = set()
        for lam in bounded:
            try:
                images.add(bijection.forward(lam, k))
            except PartitionPlaygroundError:
                pass
        same_size = len(images) == len(bounded) == len(initial)
        tallies["equinumerosity"].record(
            same_size and images == set(initial), n, k,
            detail=f"{len(bounded)} bounded, {len(images)} distinct images, {len(initial)} initial",
        )

        for lam in partitions:
            ok, detail = _safe(_order_invariance, lam, k, rng)
            tallies["order_invariance"].record(ok, n, k, lam, detail)
            ok, detail = _safe(_nonstrict, lam, k)
            tallies["nonstrict"].record(ok, n, k, lam, detail)

    logger.debug(f"Selftest sweep finished for n={n}")
    return tallies


def _check_random(max_n: int, max_k: int, seed: int, cases: int) -> CheckTally:
    """
    Roundtrip on seeded random repetition-bounded partitions.

    Part values run up to max_n, so weights reach well past the exhaustive
    sweep.
    """
    tally = CheckTally("random_roundtrip")
    if max_n == 0:
        return tally
    rng = random.Random(seed)
    for _ in range(cases):
        k = rng.randint(1, max_k)
        counts = {v: rng.randint(0, 2 * k - 1) for v in range(1, rng.randint(1, max_n) + 1)}
        lam = from_multiplicities(counts)
        ok, detail = _safe(_roundtrip, lam, k)
        tally.record(ok, lam.weight, k, lam, detail)
    return tally


def _oracle_runs(max_k: int):
    for k in range(1, max_k + 1):
        yield 1, k, None
        for m in CAPPED_M_VALUES:
            yield 2, k, m
        yield 3, k, None


def _check_oracles(max_n: int, max_k: int) -> CheckTally:
    tally = CheckTally("oracle")
    for identity, k, m in _oracle_runs(max_k):
        report = identities.verify(identity, k, m, max_n, oracle_cap=max_n)
        tally.cases += report.oracle_checked_up_to + 1
        if report.holds:
            continue
        tally.failures += 1
        if tally.counterexample is None:
            problem = report.oracle_mismatch or report.mismatch
            label = f"identity {identity}" + (f" (m={m})" if m is not None else "")
            tally.counterexample = {
                "n": problem["exponent"],
                "k": k,
                "partition": None,
                "detail": f"{label}: {problem}",
            }
    return tally


def run_selftest(max_n: int, max_k: int, seed: Optional[int] = None,
                 workers: Optional[int] = None, random_cases: Optional[int] = None) -> SelftestReport:
    """
    Run every check for n <= max_n and k <= max_k.

    Args:
        max_n: Largest weight swept exhaustively, at most the enumeration cap
        max_k: Largest modulus
        seed: Seed for shuffled strip orders and random cases (config.random_seed)
        workers: Process pool size for the per-weight sweeps (config.workers)
        random_cases: Number of random roundtrip cases (config.random_cases)

    Returns:
        SelftestReport with one tally per check
    """
    config = get_config()
    seed = config.random_seed if seed is None else seed
    workers = config.workers if workers is None else workers
    random_cases = config.random_cases if random_cases is None else random_cases

    if max_n < 0 or max_n > config.enumeration_cap:
        raise InvalidParameter(f"max_n must lie in 0..{config.enumeration_cap}, got {max_n}")
    if max_k < 1:
        raise InvalidParameter(f"max_k must be at least 1, got {max_k}")
    if random_cases < 0:
        raise InvalidParameter(f"random_cases must be non-negative, got {random_cases}")

    logger.info(f"Running selftest for n <= {max_n}, k <= {max_k} with {workers} worker(s)")
    report = SelftestReport(max_n=max_n, max_k=max_k, seed=seed,
                            checks={name: CheckTally(name) for name in CHECKS})

    weights = range(max_n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_weight, weights, repeat(max_k), repeat(seed)))
    else:
        results = [_check_weight(n, max_k, seed) for n in weights]

    for tallies in results:
        for name, tally in tallies.items():
            report.checks[name].merge(tally)
    report.checks["random_roundtrip"].merge(_check_random(max_n, max_k, seed, random_cases))
    report.checks["oracle"].merge(_check_oracles(max_n, max_k))

    logger.info(f"Selftest {'passed' if report.passed else 'FAILED'}")
    return report
