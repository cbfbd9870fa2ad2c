import pytest

from coalescence.core.colored import (
    ColoredCycle,
    ColoredStrip,
    colored_subset_census,
    compositions,
    enumerate_colored_cycles,
    enumerate_colored_subset_instances,
    enumerate_marked_strips,
    enumerate_strips,
    make_colored_cycle,
    svector_of,
    validate_colored_cycle,
)
from coalescence.core.formulas import count_colored, count_colored_subsets
from coalescence.core.permutations import Permutation
from coalescence.errors import GuardRangeError, ParameterError, StripError


def test_validate_colored_cycle_examples():
    sigma = Permutation.from_cycle_order((1, 2, 3))
    assert validate_colored_cycle(sigma, (1, 2, 3))
    assert validate_colored_cycle(sigma, (1, 1, 1))
    # (1 3 2)∘τ is a 3-cycle, so it only admits one color
    other = Permutation.from_cycle_order((1, 3, 2))
    assert validate_colored_cycle(other, (1, 1, 1))
    assert not validate_colored_cycle(other, (1, 2, 2))


def test_validate_never_raises():
    sigma = Permutation.from_cycle_order((1, 2, 3))
    assert not validate_colored_cycle(sigma, (1, 3, 3))  # not surjective onto 1..3
    assert not validate_colored_cycle(sigma, (1, 2))
    assert not validate_colored_cycle(sigma, ("a", 1, 2))
    assert not validate_colored_cycle(Permutation.identity(3), (1, 1, 1))
    assert not validate_colored_cycle(sigma, ())


def test_golden_colored_cycle_is_valid(golden_sigma, golden_colors):
    c = make_colored_cycle(golden_sigma, golden_colors)
    assert c.r == 6
    assert svector_of(c) == (5, 2, 4, 1, 2, 2)


def test_make_colored_cycle_rejects_invalid_pairs():
    with pytest.raises(ParameterError):
        make_colored_cycle(Permutation.from_cycle_order((1, 3, 2)), (1, 2, 2))


def test_from_dict_roundtrip(golden_sigma, golden_colors):
    c = make_colored_cycle(golden_sigma, golden_colors)
    assert ColoredCycle.from_dict(c.to_dict()) == c
    with pytest.raises(ParameterError):
        ColoredCycle.from_dict({"sigma": [1, 2, 3]})


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_colored_cycles_matches_count(n):
    for r in range(1, n + 1):
        cycles = list(enumerate_colored_cycles(n, r))
        assert len(cycles) == count_colored(n, r)
        assert len(set(cycles)) == len(cycles)
        assert all(validate_colored_cycle(c.sigma, c.colors) for c in cycles)


def test_enumerate_colored_cycles_small_cases():
    assert [c.colors for c in enumerate_colored_cycles(3, 3)] == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
    ]
    assert all(c.sigma.cycle_order() == (1, 2, 3) for c in enumerate_colored_cycles(3, 3))
    assert len(list(enumerate_colored_cycles(1, 1))) == 1


def test_enumerate_colored_cycles_is_lexicographic_per_sigma():
    for c_prev, c_next in zip(enumerate_colored_cycles(4, 2), list(enumerate_colored_cycles(4, 2))[1:]):
        if c_prev.sigma == c_next.sigma:
            assert c_prev.colors < c_next.colors


def test_colored_cycle_guard():
    with pytest.raises(GuardRangeError):
        next(enumerate_colored_cycles(8, 2))
    with pytest.raises(ParameterError):
        next(enumerate_colored_cycles(3, 4))


def test_colored_subset_instances():
    instances = list(enumerate_colored_subset_instances(3, 3, 2, 2))
    assert len(instances) == 18
    assert all(inst.k == 2 and inst.t == 2 for inst in instances)
    assert list(enumerate_colored_subset_instances(3, 1, 2, 2)) == []


def test_colored_subset_census_matches_formula():
    census = colored_subset_census(5)
    for r in range(1, 6):
        for k in range(1, 6):
            for t in range(1, min(k, r) + 1):
                assert census[(r, k, t)] == count_colored_subsets(5, r, k, t)


def test_strip_validation():
    strip = ColoredStrip((1, 1, 2, 3), marked=(4, 1))
    assert strip.marked == (1, 4)
    assert (strip.n, strip.r, strip.k, strip.t) == (4, 3, 2, 2)
    assert strip.block_lengths() == (2, 1, 1)
    with pytest.raises(StripError):
        ColoredStrip((2, 1))
    with pytest.raises(StripError):
        ColoredStrip((1, 3))
    with pytest.raises(StripError):
        ColoredStrip((1, 2), marked=(3,))
    with pytest.raises(StripError):
        ColoredStrip(())


def test_strip_enumerators():
    assert len(list(enumerate_strips(5, 3))) == 6
    marked = list(enumerate_marked_strips(3, 2, 2, 1))
    # strips 122 and 112, each with one same-colored pair
    assert [(s.colors, s.marked) for s in marked] == [((1, 2, 2), (2, 3)), ((1, 1, 2), (1, 2))]
    assert list(enumerate_marked_strips(3, 1, 2, 2)) == []
