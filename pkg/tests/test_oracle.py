from collections import Counter
from fractions import Fraction

import pytest

from coalescence.core.arith import binomial_general, factorial
from coalescence.core.formulas import coalescence_closed, kwak_lee_cycle_distribution, separation_probability
from coalescence.core.oracle import (
    brute_force_coalescence,
    brute_force_cycle_dist,
    brute_force_meeting_profile,
    brute_force_separation,
    census_part,
    cycle_type_census,
    meeting_profile_of,
    monte_carlo_coalescence,
)
from coalescence.errors import GuardRangeError, ParameterError


def test_smallest_nontrivial_counts():
    result = brute_force_coalescence(4, 2)
    assert (result.favorable, result.total) == (14, 36)
    assert result.probability == Fraction(7, 18)
    assert brute_force_coalescence(3, 2).probability == Fraction(1, 2)
    assert brute_force_coalescence(3, 3).probability == Fraction(1, 2)


def test_trivial_sizes():
    assert brute_force_coalescence(1, 1).probability == 1
    assert brute_force_coalescence(2, 2).probability == 0
    assert brute_force_cycle_dist(1) == {1: 1}


def test_cycle_distribution_small_n():
    assert brute_force_cycle_dist(2) == {1: 0, 2: 1}
    assert brute_force_cycle_dist(3) == {1: Fraction(1, 2), 2: 0, 3: Fraction(1, 2)}


@pytest.mark.parametrize("n", range(1, 10))
def test_oracle_matches_formulas(n):
    for k in range(1, n + 1):
        result = brute_force_coalescence(n, k)
        assert result.total == factorial(n - 1) * binomial_general(n, k)
        assert result.probability == coalescence_closed(n, k)
        if k >= 2:
            assert brute_force_separation(n, k).probability == separation_probability(n, k)
    assert brute_force_cycle_dist(n) == kwak_lee_cycle_distribution(n)


def test_census_parts_cover_the_census():
    n = 6
    combined = Counter()
    for a2 in range(2, n + 1):
        combined.update(census_part(n, a2))
    assert combined == census_part(n)
    assert dict(combined) == cycle_type_census(n)
    assert sum(cycle_type_census(n).values()) == factorial(n - 1)


def test_census_cycle_types_have_parity_of_n():
    for n in range(1, 9):
        for lengths in cycle_type_census(n):
            assert sum(lengths) == n
            assert (n - len(lengths)) % 2 == 0


def test_meeting_profile_of_small_type():
    assert meeting_profile_of((1, 2), 2) == {1: 1, 2: 2}
    assert meeting_profile_of((3,), 2) == {1: 3}
    assert meeting_profile_of((1, 1, 1), 3) == {3: 1}


def test_meeting_profile_slices():
    for n in range(2, 9):
        for k in range(2, n + 1):
            profile = brute_force_meeting_profile(n, k)
            assert sum(profile.values()) == factorial(n - 1) * binomial_general(n, k)
            assert profile.get(1, 0) == brute_force_coalescence(n, k).favorable
            assert profile.get(k, 0) == brute_force_separation(n, k).favorable


def test_guard_and_argument_errors():
    with pytest.raises(GuardRangeError):
        brute_force_coalescence(12, 2)
    with pytest.raises(GuardRangeError):
        brute_force_cycle_dist(0)
    with pytest.raises(ParameterError):
        brute_force_coalescence(4, 5)
    with pytest.raises(ParameterError):
        brute_force_separation(4, 1)


def test_monte_carlo_single_element_is_certain():
    estimate = monte_carlo_coalescence(20, 1, 100, seed=5)
    assert (estimate.estimate, estimate.stderr) == (1.0, 0.0)


def test_monte_carlo_is_deterministic_per_seed():
    first = monte_carlo_coalescence(8, 3, 5000, seed=42)
    assert first == monte_carlo_coalescence(8, 3, 5000, seed=42)
    assert 0.0 <= first.estimate <= 1.0
    assert first.samples == 5000 and first.seed == 42


def test_monte_carlo_small_run_is_close():
    estimate = monte_carlo_coalescence(6, 2, 40000, seed=1)
    exact = float(coalescence_closed(6, 2))
    assert abs(estimate.estimate - exact) <= 5 * estimate.stderr


def test_monte_carlo_k_equals_n():
    estimate = monte_carlo_coalescence(5, 5, 30000, seed=3)
    assert abs(estimate.estimate - 1 / 3) <= 5 * estimate.stderr
    assert monte_carlo_coalescence(4, 4, 2000, seed=3).estimate == 0.0


def test_monte_carlo_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        monte_carlo_coalescence(5, 6, 100, seed=0)
    with pytest.raises(ParameterError):
        monte_carlo_coalescence(5, 2, 0, seed=0)


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 11])
def test_oracle_large_tier(n):
    for k in range(1, n + 1):
        assert brute_force_coalescence(n, k).probability == coalescence_closed(n, k)


@pytest.mark.slow
@pytest.mark.parametrize("n, k", [(50, 2), (101, 3)])
def test_monte_carlo_million_samples(n, k):
    estimate = monte_carlo_coalescence(n, k, 1_000_000, seed=12345)
    assert abs(estimate.estimate - float(coalescence_closed(n, k))) <= 5 * estimate.stderr
