# coalescence/core/oracle.py

"""
Ground truth by exhaustion and by simulation.

The exhaustive routes fix τ = canonical_tau(n) and let σ run over all n-cycles.
Relabeling turns "two independent uniform n-cycles and the fixed set {1..k}"
into "σ uniform with τ fixed and a uniform k-subset", so the exhaustive
counts are over pairs (σ, K) and the total is (n-1)! binom(n, k).

Everything the exhaustive routes need is a function of the multiset of cycle
lengths of σ∘τ, so a single census per n (cycle type -> number of σ) feeds
all of them. The census is split by the first entry a2 of σ = (1 a2 ... an)
and the parts may run in worker processes.
"""

import logging
import math
import multiprocessing
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from ..config import get_settings
from ..errors import GuardRangeError, ParameterError
from .arith import binomial_general as binom
from .arith import factorial
from .permutations import ncycle_arrangements, sample_ncycle_images

logger = logging.getLogger("cycle_coalescence.core.oracle")

CycleType = tuple[int, ...]


@dataclass(frozen=True)
class OracleResult:
    favorable: int
    total: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.favorable, self.total)


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int
    seed: int


def _check_guard(n: int) -> None:
    limit = get_settings().ORACLE_LIMIT
    if not 1 <= n <= limit:
        raise GuardRangeError(f"Exhaustive oracle is limited to 1 <= n <= {limit}, got n={n}")


def census_part(n: int, a2: Optional[int] = None) -> Counter:
    """
    Cycle types of σ∘τ for the n-cycles σ = (1 a2 ... an) with the given a2
    (all n-cycles when a2 is None). Keys are sorted tuples of cycle lengths.
    """
    counts: Counter = Counter()
    prefix = () if a2 is None or n < 2 else (a2,)
    sigma = [0] * (n + 1)
    product = [0] * (n + 1)
    seen = [False] * (n + 1)
    for tail in ncycle_arrangements(n, prefix):
        previous = 1
        for x in tail:
            sigma[previous] = x
            previous = x
        sigma[previous] = 1
        # (σ∘τ)(1) = σ(n) and (σ∘τ)(i) = σ(i-1)
        product[1] = sigma[n]
        for i in range(2, n + 1):
            product[i] = sigma[i - 1]
        for i in range(1, n + 1):
            seen[i] = False
        lengths = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = product[x]
                length += 1
            lengths.append(length)
        lengths.sort()
        counts[tuple(lengths)] += 1
    return counts


@lru_cache(maxsize=None)
def _cycle_type_census(n: int, workers: int) -> tuple[tuple[CycleType, int], ...]:
    # Worker processes of the verifier run the census serially.
    if n == 1 or workers <= 1 or multiprocessing.parent_process() is not None:
        census = census_part(n)
    else:
        census = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(census_part, [n] * (n - 1), range(2, n + 1)):
                census.update(part)
    logger.info(f"Cycle-type census for n={n}: {len(census)} types over {sum(census.values())} n-cycles")
    return tuple(sorted(census.items()))


def cycle_type_census(n: int) -> dict[CycleType, int]:
    """Cycle type of σ∘τ -> number of n-cycles σ producing it (memoized per n)."""
    _check_guard(n)
    return dict(_cycle_type_census(n, max(1, get_settings().VERIFY_WORKERS)))


def _require_k(n: int, k: int, k_min: int = 1) -> None:
    if not k_min <= k <= n:
        raise ParameterError(f"Need {k_min} <= k <= n, got n={n}, k={k}")


def brute_force_coalescence(n: int, k: int) -> OracleResult:
    """Pairs (σ, K) with K a k-subset lying inside a single cycle of σ∘τ."""
    _check_guard(n)
    _require_k(n, k)
    favorable = sum(
        count * sum(binom(length, k) for length in lengths)
        for lengths, count in cycle_type_census(n).items()
    )
    return OracleResult(favorable, factorial(n - 1) * binom(n, k))


def _elementary_symmetric(values: CycleType, k: int) -> int:
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def brute_force_separation(n: int, k: int) -> OracleResult:
    """Pairs (σ, K) with the k elements of K in k distinct cycles of σ∘τ."""
    _check_guard(n)
    _require_k(n, k, k_min=2)
    favorable = sum(
        count * _elementary_symmetric(lengths, k) for lengths, count in cycle_type_census(n).items()
    )
    return OracleResult(favorable, factorial(n - 1) * binom(n, k))


def brute_force_cycle_dist(n: int) -> dict[int, Fraction]:
    """Exact distribution of the cycle count of σ∘τ, keyed by ν = 1..n."""
    _check_guard(n)
    counts = Counter()
    for lengths, count in cycle_type_census(n).items():
        counts[len(lengths)] += count
    total = factorial(n - 1)
    return {nu: Fraction(counts[nu], total) for nu in range(1, n + 1)}


def meeting_profile_of(lengths: CycleType, k: int) -> dict[int, int]:
    """
    b -> number of k-subsets meeting exactly b cycles, for a permutation with
    the given cycle lengths: the x^k y^b coefficients of Π (1 + y((1+x)^ℓ - 1)).
    """
    # poly[b][j] = coefficient of y^b x^j
    poly = [[1] + [0] * k]
    for length in lengths:
        grown = [row[:] for row in poly] + [[0] * (k + 1)]
        for b, row in enumerate(poly):
            for j, coefficient in enumerate(row):
                if not coefficient:
                    continue
                for m in range(1, min(length, k - j) + 1):
                    grown[b + 1][j + m] += coefficient * math.comb(length, m)
        poly = grown
    return {b: row[k] for b, row in enumerate(poly) if b >= 1 and row[k]}


def brute_force_meeting_profile(n: int, k: int) -> dict[int, int]:
    """b -> number of pairs (σ, K) whose k-subset K meets exactly b cycles of σ∘τ."""
    _check_guard(n)
    _require_k(n, k)
    profile: Counter = Counter()
    for lengths, count in cycle_type_census(n).items():
        for b, ways in meeting_profile_of(lengths, k).items():
            profile[b] += count * ways
    return dict(sorted(profile.items()))


# --- Monte-Carlo ---


def _coalesced_in_batch(n: int, k: int, size: int, rng: np.random.Generator) -> int:
    sigma = sample_ncycle_images(n, size, rng)
    tau = sample_ncycle_images(n, size, rng)
    product = np.take_along_axis(sigma, tau, axis=1)

    rows = np.arange(size)
    current = np.zeros(size, dtype=np.int64)
    inside = np.ones(size, dtype=bool)
    hits = np.ones(size, dtype=np.int64)
    for _ in range(n - 1):
        current = product[rows, current]
        inside &= current != 0
        hits += inside & (current < k)
    return int(np.count_nonzero(hits == k))


def monte_carlo_coalescence(n: int, k: int, samples: int, seed: int) -> MonteCarloEstimate:
    """
    Fraction of sampled pairs of independent uniform n-cycles (σ, τ') with
    1..k in one cycle of σ∘τ'. Batches draw from child seeds of the master
    seed, so a fixed seed and batch size reproduce the same estimate.
    """
    _require_k(n, k)
    if samples < 1:
        raise ParameterError(f"Need samples >= 1, got {samples}")
    if k == 1:
        return MonteCarloEstimate(1.0, 0.0, samples, seed)

    batch = max(1, get_settings().MONTE_CARLO_BATCH)
    sizes = [batch] * (samples // batch)
    if samples % batch:
        sizes.append(samples % batch)
    children = np.random.SeedSequence(int(seed) % 2**64).spawn(len(sizes))

    hits = 0
    for size, child in zip(sizes, children):
        hits += _coalesced_in_batch(n, k, size, np.random.default_rng(child))
    estimate = hits / samples
    stderr = math.sqrt(estimate * (1.0 - estimate) / samples)
    logger.info(f"Monte-Carlo n={n} k={k}: {hits}/{samples} coalesced (seed={seed})")
    return MonteCarloEstimate(estimate, stderr, samples, seed)
