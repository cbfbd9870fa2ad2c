# coalescence/core/colored.py

"""
Colored cycles, colored subsets and strips, with their exhaustive enumerators.

An r-colored n-cycle is an n-cycle σ together with a surjective coloring of
{1..n} by {1..r} such that every cycle of σ∘τ is monochromatic, τ being
canonical_tau(n). Colors are labeled: swapping two colors of equal
multiplicity gives a different object.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Sequence

from ..config import get_settings
from ..errors import GuardRangeError, ParameterError, StripError
from .permutations import (
    Permutation,
    canonical_tau,
    compose,
    cycle_decomposition,
    enumerate_ncycles,
)

logger = logging.getLogger("cycle_coalescence.core.colored")


@dataclass(frozen=True)
class ColoredCycle:
    sigma: Permutation
    colors: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.sigma.size

    @property
    def r(self) -> int:
        return max(self.colors)

    def color_of(self, element: int) -> int:
        return self.colors[element - 1]

    def to_dict(self) -> dict[str, Any]:
        return {"sigma": self.sigma.to_list(), "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ColoredCycle":
        try:
            sigma = Permutation(tuple(data["sigma"]))
            colors = tuple(int(c) for c in data["colors"])
        except (KeyError, TypeError) as e:
            raise ParameterError(f"Malformed colored cycle document: {e}") from e
        return make_colored_cycle(sigma, colors)


@dataclass(frozen=True)
class ColoredSubsetInstance:
    """A k-subset of a colored cycle; t is the number of colors its elements carry."""
    base: ColoredCycle
    subset: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.subset)

    @property
    def t(self) -> int:
        return len({self.base.color_of(x) for x in self.subset})

    def to_dict(self) -> dict[str, Any]:
        return {**self.base.to_dict(), "subset": list(self.subset)}


@dataclass(frozen=True)
class ColoredStrip:
    """
    A nondecreasing surjective coloring of positions 1..n, optionally with a
    set of marked (selected) positions.
    """
    colors: tuple[int, ...]
    marked: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors:
            raise StripError("A strip needs at least one box.")
        if any(a > b for a, b in zip(colors, colors[1:])):
            raise StripError(f"Strip colors {list(colors)} are not nondecreasing.")
        if set(colors) != set(range(1, max(colors) + 1)) or colors[0] != 1:
            raise StripError(f"Strip colors {list(colors)} do not use every color 1..{max(colors)}.")
        if self.marked is not None:
            marked = tuple(sorted(set(self.marked)))
            if len(marked) != len(self.marked) or any(not 1 <= p <= len(colors) for p in marked):
                raise StripError(f"Marked positions {list(self.marked)} are not distinct positions of the strip.")
            object.__setattr__(self, "marked", marked)

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def r(self) -> int:
        return self.colors[-1]

    @property
    def k(self) -> int:
        return len(self.marked or ())

    @property
    def t(self) -> int:
        return len({self.colors[p - 1] for p in self.marked or ()})

    def block_lengths(self) -> tuple[int, ...]:
        counts = Counter(self.colors)
        return tuple(counts[c] for c in range(1, self.r + 1))

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"colors": list(self.colors)}
        if self.marked is not None:
            data["marked"] = list(self.marked)
        return data


def validate_colored_cycle(sigma: Permutation, colors: Sequence[int]) -> bool:
    """
    True iff sigma is an n-cycle, `colors` is a surjective coloring onto 1..r
    and every cycle of sigma∘τ is monochromatic. Never raises.
    """
    try:
        n = sigma.size
        if len(colors) != n or n == 0:
            return False
        if any(not isinstance(c, int) or isinstance(c, bool) for c in colors):
            return False
        r = max(colors)
        if set(colors) != set(range(1, r + 1)):
            return False
        if not sigma.is_ncycle():
            return False
        product = compose(sigma, canonical_tau(n))
        return all(
            len({colors[x - 1] for x in cycle}) == 1
            for cycle in cycle_decomposition(product).cycles
        )
    except Exception:
        return False


def make_colored_cycle(sigma: Permutation, colors: Sequence[int]) -> ColoredCycle:
    """Validating constructor; raises ParameterError on an invalid pair."""
    colors = tuple(colors)
    if not validate_colored_cycle(sigma, colors):
        raise ParameterError(
            f"Not a colored cycle: sigma={sigma.to_cycle_notation()} colors={list(colors)}"
        )
    return ColoredCycle(sigma, colors)


def svector_of(c: ColoredCycle) -> tuple[int, ...]:
    """Color multiplicities (s_1, ..., s_r)."""
    counts = Counter(c.colors)
    return tuple(counts[i] for i in range(1, c.r + 1))


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n into r positive parts, in lexicographic order of cut points."""
    if r < 1 or n < r:
        return
    for cuts in itertools.combinations(range(1, n), r - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _check_guard(name: str, n: int, limit: int) -> None:
    if not 1 <= n <= limit:
        raise GuardRangeError(f"{name} is limited to 1 <= n <= {limit}, got n={n}")


def enumerate_colored_cycles(n: int, r: int) -> Iterator[ColoredCycle]:
    """
    Every r-colored n-cycle exactly once.

    For each n-cycle σ the admissible colorings are exactly the surjective
    maps from the cycles of σ∘τ onto 1..r, so those are generated directly.
    Listing cycles by minimum element keeps the output in the same order as
    filtering all r^n colorings lexicographically.
    """
    _check_guard("Colored-cycle enumeration", n, get_settings().COLORED_CYCLE_LIMIT)
    if not 1 <= r <= n:
        raise ParameterError(f"Need 1 <= r <= n, got r={r}, n={n}")

    tau = canonical_tau(n)
    for sigma in enumerate_ncycles(n):
        blocks = cycle_decomposition(compose(sigma, tau)).cycles
        if len(blocks) < r:
            continue
        for block_colors in itertools.product(range(1, r + 1), repeat=len(blocks)):
            if len(set(block_colors)) != r:
                continue
            colors = [0] * n
            for block, color in zip(blocks, block_colors):
                for x in block:
                    colors[x - 1] = color
            yield ColoredCycle(sigma, tuple(colors))


def enumerate_colored_subset_instances(n: int, r: int, k: int, t: int) -> Iterator[ColoredSubsetInstance]:
    """All t-colored k-subsets of r-colored n-cycles. Empty when t > min(k, r)."""
    _check_guard("Colored-subset enumeration", n, get_settings().COLORED_SUBSET_LIMIT)
    if not (1 <= r <= n and 1 <= k <= n and t >= 1):
        raise ParameterError(f"Invalid shape (n={n}, r={r}, k={k}, t={t})")
    if t > min(k, r):
        return

    for base in enumerate_colored_cycles(n, r):
        for subset in itertools.combinations(range(1, n + 1), k):
            if len({base.colors[x - 1] for x in subset}) == t:
                yield ColoredSubsetInstance(base, subset)


def colored_subset_census(n: int) -> Counter:
    """
    Number of t-colored k-subsets of r-colored n-cycles for every (r, k, t),
    collected in a single pass over all colored cycles.
    """
    _check_guard("Colored-subset census", n, get_settings().COLORED_SUBSET_LIMIT)
    census: Counter = Counter()
    subsets = [
        subset
        for k in range(1, n + 1)
        for subset in itertools.combinations(range(n), k)
    ]
    for r in range(1, n + 1):
        cycles_seen = 0
        for base in enumerate_colored_cycles(n, r):
            cycles_seen += 1
            colors = base.colors
            for subset in subsets:
                t = len({colors[i] for i in subset})
                census[(r, len(subset), t)] += 1
        logger.debug(f"Census n={n} r={r}: {cycles_seen} colored cycles")
    return census


def enumerate_strips(n: int, r: int) -> Iterator[ColoredStrip]:
    """All plain (unmarked) r-colored n-strips."""
    for blocks in compositions(n, r):
        yield ColoredStrip(tuple(c for c, size in enumerate(blocks, start=1) for _ in range(size)))


def enumerate_marked_strips(n: int, r: int, k: int, t: int) -> Iterator[ColoredStrip]:
    """All r-colored n-strips with k marked positions spanning exactly t colors."""
    _check_guard("Marked-strip enumeration", n, get_settings().COLORED_CYCLE_LIMIT)
    if not (1 <= r <= n and 1 <= k <= n and t >= 1):
        raise ParameterError(f"Invalid shape (n={n}, r={r}, k={k}, t={t})")
    if t > min(k, r):
        return
    for strip in enumerate_strips(n, r):
        for marked in itertools.combinations(range(1, n + 1), k):
            if len({strip.colors[p - 1] for p in marked}) == t:
                yield ColoredStrip(strip.colors, marked)
