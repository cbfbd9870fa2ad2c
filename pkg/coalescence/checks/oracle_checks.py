# coalescence/checks/oracle_checks.py

"""Closed forms against exhaustive enumeration of σ∘τ, and a seeded Monte-Carlo sanity run."""

import itertools
from fractions import Fraction
from typing import List, Optional

from ..core import formulas, oracle
from ..core.arith import binomial_general as binom
from ..core.arith import factorial
from ..core.permutations import canonical_tau, compose, cycles_meeting_subset, enumerate_ncycles
from ..core.report_processor import make_identity_report
from ..schemas import IdentityReport

SUITE = "oracle"

# (n, k) pairs for the Monte-Carlo run, one of each parity
MONTE_CARLO_CASES = ((50, 2), (101, 3))


def check_oracle_coalescence(n_max: int = 9) -> IdentityReport:
    def evaluations():
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                result = oracle.brute_force_coalescence(n, k)
                yield {"n": n, "k": k}, formulas.coalescence_closed(n, k), result.probability
                yield {"n": n, "k": k, "total": True}, factorial(n - 1) * binom(n, k), result.total

    return make_identity_report("oracle_coalescence", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_oracle_separation(n_max: int = 9) -> IdentityReport:
    return make_identity_report(
        "oracle_separation",
        SUITE,
        f"2 <= k <= n <= {n_max}",
        (
            (
                {"n": n, "k": k},
                formulas.separation_probability(n, k),
                oracle.brute_force_separation(n, k).probability,
            )
            for n in range(2, n_max + 1)
            for k in range(2, n + 1)
        ),
    )


def check_oracle_cycle_distribution(n_max: int = 9) -> IdentityReport:
    """The cycle count of σ∘τ follows the Stirling-number law and always has the parity of n."""

    def evaluations():
        for n in range(1, n_max + 1):
            yield {"n": n}, formulas.kwak_lee_cycle_distribution(n), oracle.brute_force_cycle_dist(n)
            off_parity = sum(
                count for lengths, count in oracle.cycle_type_census(n).items() if (len(lengths) - n) % 2
            )
            yield {"n": n, "parity": True}, 0, off_parity

    return make_identity_report("oracle_cycle_distribution", SUITE, f"1 <= n <= {n_max}", evaluations())


def check_meeting_profile(n_max: int = 9) -> IdentityReport:
    """
    Splitting the (σ, K) pairs by how many cycles K meets: the slices add up
    to the total, b = 1 is coalescence and b = k is separation.
    """

    def evaluations():
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                profile = oracle.brute_force_meeting_profile(n, k)
                params = {"n": n, "k": k}
                yield {**params, "slice": "sum"}, factorial(n - 1) * binom(n, k), sum(profile.values())
                yield (
                    {**params, "slice": 1},
                    oracle.brute_force_coalescence(n, k).favorable,
                    profile.get(1, 0),
                )
                if k >= 2:
                    yield (
                        {**params, "slice": k},
                        oracle.brute_force_separation(n, k).favorable,
                        profile.get(k, 0),
                    )

    return make_identity_report("meeting_profile", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_direct_enumeration(n_max: int = 6) -> IdentityReport:
    """Census-based favorable counts against building every product σ∘τ and testing every k-subset."""

    def evaluations():
        for n in range(1, n_max + 1):
            tau = canonical_tau(n)
            favorable = [0] * (n + 1)
            for sigma in enumerate_ncycles(n):
                product = compose(sigma, tau)
                for k in range(1, n + 1):
                    favorable[k] += sum(
                        1
                        for subset in itertools.combinations(range(1, n + 1), k)
                        if cycles_meeting_subset(product, subset) == 1
                    )
            for k in range(1, n + 1):
                yield {"n": n, "k": k}, oracle.brute_force_coalescence(n, k).favorable, favorable[k]

    return make_identity_report("direct_enumeration", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_monte_carlo(samples: int = 1_000_000, seed: int = 12345) -> IdentityReport:
    """Seeded estimates fall within five standard errors of the closed form."""
    details = {}

    def evaluations():
        for n, k in MONTE_CARLO_CASES:
            estimate = oracle.monte_carlo_coalescence(n, k, samples, seed)
            exact = formulas.coalescence_closed(n, k)
            details[f"{n},{k}"] = {"estimate": estimate.estimate, "stderr": estimate.stderr}
            deviation = abs(Fraction(estimate.estimate) - exact)
            yield {"n": n, "k": k, "samples": samples, "seed": seed}, True, deviation <= 5 * Fraction(estimate.stderr)

    evaluated = list(evaluations())
    return make_identity_report(
        "monte_carlo", SUITE, f"(n, k) in {list(MONTE_CARLO_CASES)}", evaluated, details
    )


def oracle_checks(n_max: Optional[int] = None) -> List[tuple]:
    """(name, callable, kwargs) for the oracle suite; n_max beyond ORACLE_LIMIT raises GuardRangeError."""
    exhaustive = n_max or 9
    return [
        ("oracle_coalescence", check_oracle_coalescence, {"n_max": exhaustive}),
        ("oracle_separation", check_oracle_separation, {"n_max": exhaustive}),
        ("oracle_cycle_distribution", check_oracle_cycle_distribution, {"n_max": exhaustive}),
        ("meeting_profile", check_meeting_profile, {"n_max": exhaustive}),
        ("direct_enumeration", check_direct_enumeration, {"n_max": min(exhaustive, 6)}),
        ("monte_carlo", check_monte_carlo, {}),
    ]
