import logging
from collections import Counter

import pytest

from coalescence.core.permutations import (
    Permutation,
    canonical_tau,
    compose,
    cycle_decomposition,
    cycles_meeting_subset,
    enumerate_ncycles,
    make_generator,
    sample_ncycle,
    sample_ncycle_images,
)
from coalescence.errors import GuardRangeError, ParameterError


def test_compose_applies_right_factor_first():
    p = Permutation((2, 1, 3))
    q = Permutation((1, 3, 2))
    assert compose(p, q).images == (2, 3, 1)
    assert compose(p, Permutation.identity(3)) == p
    assert compose(p, p.inverse()) == Permutation.identity(3)


def test_compose_rejects_size_mismatch():
    with pytest.raises(ParameterError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_invalid_image_array_is_rejected():
    with pytest.raises(ParameterError):
        Permutation((1, 1, 2))


def test_canonical_tau():
    tau = canonical_tau(4)
    assert tau.images == (4, 1, 2, 3)
    assert tau.is_ncycle()
    assert canonical_tau(1) == Permutation.identity(1)
    assert tau.to_cycle_notation() == "(1 4 3 2)"


def test_cycle_decomposition_orders_by_minimum():
    p = Permutation.from_cycles(6, [(4, 6), (2, 5, 3)])
    decomposition = cycle_decomposition(p)
    assert decomposition.cycles == ((1,), (2, 5, 3), (4, 6))
    assert decomposition.count == 3
    assert decomposition.lengths == (1, 3, 2)
    assert p.to_cycle_notation() == "(2 5 3)(4 6)"
    assert Permutation.identity(3).to_cycle_notation() == "()"


def test_three_cycle_products_with_tau():
    tau = canonical_tau(3)
    counts = sorted(compose(sigma, tau).cycle_count() for sigma in enumerate_ncycles(3))
    # one product is the identity, the other a 3-cycle
    assert counts == [1, 3]


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_ncycles_counts_and_shapes(n):
    cycles = list(enumerate_ncycles(n))
    expected = 1
    for j in range(2, n):
        expected *= j
    assert len(cycles) == expected
    assert len(set(cycles)) == expected
    assert all(sigma.is_ncycle() for sigma in cycles)


def test_enumerate_ncycles_order_and_prefix_partition():
    assert [sigma.cycle_order() for sigma in enumerate_ncycles(3)] == [(1, 2, 3), (1, 3, 2)]
    everything = list(enumerate_ncycles(5))
    by_prefix = [sigma for a2 in range(2, 6) for sigma in enumerate_ncycles(5, prefix=(a2,))]
    assert by_prefix == everything


def test_enumeration_guard():
    with pytest.raises(GuardRangeError):
        next(enumerate_ncycles(13))


def test_enumeration_logs_its_stream(caplog):
    with caplog.at_level(logging.DEBUG, logger="cycle_coalescence.core.permutations"):
        list(enumerate_ncycles(4, prefix=(3,)))
    assert "Enumerating 4-cycles with prefix (3,)" in caplog.text


def test_cycles_meeting_subset():
    p = Permutation.from_cycles(5, [(1, 2), (3, 4, 5)])
    assert cycles_meeting_subset(p, {1, 2}) == 1
    assert cycles_meeting_subset(p, {1, 3}) == 2
    assert cycles_meeting_subset(Permutation.identity(5), {1, 2, 3}) == 3
    with pytest.raises(ParameterError):
        cycles_meeting_subset(p, {6})


def test_sample_ncycle_is_deterministic():
    first = sample_ncycle(10, seed=99)
    assert first == sample_ncycle(10, seed=99)
    assert first.is_ncycle()
    assert sample_ncycle(1, seed=0) == Permutation.identity(1)


def test_sampled_rows_are_ncycles():
    images = sample_ncycle_images(7, 200, make_generator(3))
    for row in images:
        sigma = Permutation(tuple(int(x) + 1 for x in row))
        assert sigma.is_ncycle()


def test_sample_ncycle_is_roughly_uniform():
    rng = make_generator(2024)
    counts = Counter(
        Permutation(tuple(int(x) + 1 for x in row)).cycle_order()
        for row in sample_ncycle_images(4, 6000, rng)
    )
    assert len(counts) == 6
    # each of the six 4-cycles expects 1000 hits; 10 sigma is about 300
    assert all(700 < c < 1300 for c in counts.values())
