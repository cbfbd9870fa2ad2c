import itertools
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from coalescence.core.arith import (
    as_rational,
    bell,
    binomial_general,
    factorial,
    falling_factorial,
    stirling_first_unsigned,
    stirling_second,
)
from coalescence.core.permutations import Permutation, cycle_decomposition
from coalescence.errors import ParameterError
from coalescence.schemas import DistributionEntry


@pytest.mark.parametrize(
    "a, b, expected",
    [(4, 2, 6), (-1, 3, -1), (-3, 2, 6), (5, -1, 0), (3, 5, 0), (0, 0, 1), (-1, 0, 1)],
)
def test_binomial_general_examples(a, b, expected):
    assert binomial_general(a, b) == expected


def test_binomial_matches_factorials_and_pascal():
    for a in range(0, 15):
        for b in range(0, a + 1):
            assert binomial_general(a, b) == factorial(a) // (factorial(b) * factorial(a - b))
    for a in range(-12, 13):
        for b in range(1, 10):
            assert binomial_general(a, b) == binomial_general(a - 1, b) + binomial_general(a - 1, b - 1)


def test_binomial_of_minus_one_alternates():
    assert [binomial_general(-1, k) for k in range(6)] == [1, -1, 1, -1, 1, -1]


def test_factorial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(16) == 20922789888000
    with pytest.raises(ParameterError):
        factorial(-1)


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(-2, 3) == -24
    assert falling_factorial(2, 4) == 0


def test_stirling_second_examples():
    assert stirling_second(4, 2) == 7
    assert all(stirling_second(b, b) == 1 for b in range(1, 10))
    assert stirling_second(3, 5) == 0


def test_stirling_first_examples():
    assert stirling_first_unsigned(3, 2) == 3
    assert all(stirling_first_unsigned(n, n) == 1 for n in range(1, 10))
    assert stirling_first_unsigned(4, 1) == 6


def test_stirling_numbers_reject_nonpositive_arguments():
    with pytest.raises(ParameterError):
        stirling_second(0, 1)
    with pytest.raises(ParameterError):
        stirling_first_unsigned(3, 0)


def _set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def test_stirling_numbers_by_enumeration():
    for n in range(1, 8):
        by_cycles = [0] * (n + 1)
        for images in itertools.permutations(range(1, n + 1)):
            by_cycles[cycle_decomposition(Permutation(images)).count] += 1
        assert [stirling_first_unsigned(n, k) for k in range(1, n + 1)] == by_cycles[1:]
        assert sum(by_cycles) == factorial(n)

        by_blocks = [0] * (n + 1)
        for partition in _set_partitions(list(range(n))):
            by_blocks[len(partition)] += 1
        assert [stirling_second(n, t) for t in range(1, n + 1)] == by_blocks[1:]
        assert sum(by_blocks) == bell(n)


def test_bell_numbers():
    assert [bell(b) for b in range(1, 9)] == [1, 2, 5, 15, 52, 203, 877, 4140]


def test_rationals_are_reduced_and_canonical():
    rng = random.Random(7)
    for _ in range(500):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        c = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        for value in (a + b, a * b, a - c):
            assert value.denominator > 0
    zero = as_rational(0)
    assert (zero.numerator, zero.denominator) == (0, 1)
    assert as_rational(Fraction(6, -4)) == Fraction(-3, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_wire_rationals_normalize_and_reject_floats():
    entry = DistributionEntry(nu=1, probability=Fraction(6, -4))
    assert entry.probability == Fraction(-3, 2)
    assert entry.model_dump(mode="json") == {"nu": 1, "probability": "-3/2"}
    assert DistributionEntry(nu=2, probability=3).model_dump(mode="json")["probability"] == "3"
    assert DistributionEntry(nu=2, probability="10/4").probability == Fraction(5, 2)
    with pytest.raises(ValidationError):
        DistributionEntry(nu=1, probability=0.5)


def test_no_overflow_at_large_arguments():
    value = binomial_general(400, 200)
    assert value > 2**64
    assert factorial(200) % binomial_general(200, 100) == 0
