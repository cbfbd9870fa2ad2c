from fractions import Fraction

import pytest

from coalescence.core.arith import factorial
from coalescence.core.formulas import (
    bona_pittel,
    coalescence_closed,
    coalescence_sum,
    count_colored,
    count_colored_subsets,
    count_seq_colored,
    kwak_lee_cycle_distribution,
    partial_fraction_table,
    separation_probability,
)
from coalescence.errors import ParameterError

TABLE = {
    1: ("1", "1"),
    2: ("1/2 - (2/3)/(n-1) + (2/3)/(n+2)", "1/2"),
    3: ("1/3 - 1/(n-1) + 1/(n+2)", "1/3 + (1/5)/(n-2) - (1/5)/(n+3)"),
    4: (
        "1/4 - (2/35)/(n-3) - (6/5)/(n-1) + (6/5)/(n+2) + (2/35)/(n+4)",
        "1/4 + (2/5)/(n-2) - (2/5)/(n+3)",
    ),
    5: (
        "1/5 - (1/7)/(n-3) - (4/3)/(n-1) + (4/3)/(n+2) + (1/7)/(n+4)",
        "1/5 + (1/63)/(n-4) + (4/7)/(n-2) - (4/7)/(n+3) - (1/63)/(n+5)",
    ),
}


@pytest.mark.parametrize("k", sorted(TABLE))
def test_partial_fraction_rows(k):
    even, odd = partial_fraction_table(k)
    assert (even.render(), odd.render()) == TABLE[k]
    assert (even.parity, odd.parity) == ("even", "odd")
    assert even.constant == odd.constant == Fraction(1, k)


def test_k4_even_row_terms():
    even, _ = partial_fraction_table(4)
    assert even.terms == (
        (3, Fraction(-2, 35)), (1, Fraction(-6, 5)), (-2, Fraction(6, 5)), (-4, Fraction(2, 35))
    )


@pytest.mark.parametrize("k", range(1, 11))
def test_rows_are_reflection_symmetric(k):
    assert all(row.is_reflection_symmetric() for row in partial_fraction_table(k))


def test_rows_agree_with_closed_form():
    for k in range(1, 9):
        even, odd = partial_fraction_table(k)
        for n in range(k, 40):
            row = even if n % 2 == 0 else odd
            assert row.evaluate(n) == coalescence_closed(n, k)


def test_row_evaluation_at_a_pole_is_an_error():
    even, _ = partial_fraction_table(2)
    with pytest.raises(ParameterError):
        even.evaluate(1)
    with pytest.raises(ParameterError):
        partial_fraction_table(0)


def test_first_nontrivial_value():
    assert coalescence_closed(4, 2) == Fraction(7, 18)
    assert coalescence_sum(4, 2) == Fraction(7, 18)
    assert bona_pittel(4, 2) == Fraction(7, 18)


@pytest.mark.parametrize("n", range(1, 13))
def test_three_routes_agree(n):
    for k in range(1, n + 1):
        closed = coalescence_closed(n, k)
        assert coalescence_sum(n, k) == closed
        assert bona_pittel(n, k) == closed
        assert 0 <= closed <= 1


def test_k_equals_one_is_certain():
    assert all(coalescence_closed(n, 1) == 1 for n in range(1, 20))


@pytest.mark.parametrize("n", range(2, 30))
def test_two_elements(n):
    expected = Fraction(1, 2) if n % 2 else Fraction(1, 2) - Fraction(2, (n - 1) * (n + 2))
    assert coalescence_closed(n, 2) == expected


@pytest.mark.parametrize("n", range(3, 30))
def test_three_elements(n):
    if n % 2:
        expected = Fraction(1, 3) + Fraction(1, (n - 2) * (n + 3))
    else:
        expected = Fraction(1, 3) - Fraction(3, (n - 1) * (n + 2))
    assert coalescence_closed(n, 3) == expected


@pytest.mark.parametrize("n", range(1, 20))
def test_whole_set_in_one_cycle(n):
    expected = Fraction(2, n + 1) if n % 2 else Fraction(0)
    assert coalescence_closed(n, n) == expected


def test_large_arguments_stay_exact():
    value = coalescence_closed(1000, 7)
    _, odd = partial_fraction_table(7)
    assert value == partial_fraction_table(7)[0].evaluate(1000)
    assert coalescence_closed(1001, 7) == odd.evaluate(1001)
    assert value.denominator > 1


def test_invalid_shapes():
    for n, k in [(3, 4), (3, 0), (0, 0)]:
        with pytest.raises(ParameterError):
            coalescence_closed(n, k)
        with pytest.raises(ParameterError):
            coalescence_sum(n, k)
        with pytest.raises(ParameterError):
            bona_pittel(n, k)
    with pytest.raises(ParameterError):
        separation_probability(5, 1)


def test_separation_probability():
    assert separation_probability(4, 2) == Fraction(11, 18)
    for n in range(2, 25):
        # two elements either share a cycle or they don't
        assert separation_probability(n, 2) + coalescence_closed(n, 2) == 1
    assert separation_probability(5, 3) == Fraction(1, 6) + Fraction(2, 3 * 8)


def test_cycle_distribution():
    assert kwak_lee_cycle_distribution(1) == {1: 1}
    assert kwak_lee_cycle_distribution(2) == {1: 0, 2: 1}
    assert kwak_lee_cycle_distribution(3) == {1: Fraction(1, 2), 2: 0, 3: Fraction(1, 2)}
    for n in range(1, 15):
        dist = kwak_lee_cycle_distribution(n)
        assert sum(dist.values()) == 1
        assert all(p == 0 for nu, p in dist.items() if (n - nu) % 2)
    with pytest.raises(ParameterError):
        kwak_lee_cycle_distribution(0)


def test_colored_counts():
    assert count_colored(3, 3) == 6
    assert count_colored(1, 1) == 1
    assert count_colored(4, 1) == factorial(4) // 4
    assert count_colored_subsets(3, 3, 2, 2) == 18
    assert count_colored_subsets(4, 1, 2, 2) == 0
    assert count_seq_colored((5, 2, 4, 1, 2, 2)) == factorial(16) // 11
    assert count_seq_colored((3,)) == factorial(3) // 3


def test_colored_count_sums_over_svectors():
    # number of compositions of n into r parts is binom(n-1, r-1)
    assert count_colored(6, 3) == 10 * count_seq_colored((1, 2, 3))


def test_colored_count_errors():
    with pytest.raises(ParameterError):
        count_colored(3, 4)
    with pytest.raises(ParameterError):
        count_seq_colored(())
    with pytest.raises(ParameterError):
        count_seq_colored((2, 0))
    with pytest.raises(ParameterError):
        count_colored_subsets(3, 1, 0, 1)
