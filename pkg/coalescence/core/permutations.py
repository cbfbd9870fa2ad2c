# coalescence/core/permutations.py

"""
Permutation algebra on {1..n}.

Elements are 1-based at every public boundary. Products follow the
"right factor acts first" convention: compose(p, q)(i) == p(q(i)). The oracle
and the bijection chain both rely on this; στ always means compose(σ, τ).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from ..config import get_settings
from ..errors import GuardRangeError, ParameterError

logger = logging.getLogger("cycle_coalescence.core.permutations")


@dataclass(frozen=True)
class CycleDecomposition:
    """Orbits of a permutation, each starting at its minimum, ordered by minimum."""
    cycles: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cycles)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def cycle_index(self) -> dict[int, int]:
        """Maps every element to the position of its cycle in `cycles`."""
        return {x: idx for idx, cycle in enumerate(self.cycles) for x in cycle}


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1..n}, stored as its one-line image array.

    images[i - 1] is the image of i.
    """
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParameterError(f"Image array {list(images)} is not a permutation of 1..{len(images)}")

    # --- Construction ---

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Builds a permutation from disjoint cycles; unmentioned elements are fixed."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for idx, x in enumerate(cycle):
                if x in seen or not 1 <= x <= n:
                    raise ParameterError(f"Cycles {list(cycles)} are not disjoint cycles on 1..{n}")
                seen.add(x)
                images[x - 1] = cycle[(idx + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def from_cycle_order(cls, order: Sequence[int]) -> "Permutation":
        """The n-cycle (order[0] order[1] ... order[n-1])."""
        return cls.from_cycles(len(order), [order])

    # --- Queries ---

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> CycleDecomposition:
        return cycle_decomposition(self)

    def cycle_count(self) -> int:
        return cycle_decomposition(self).count

    def is_ncycle(self) -> bool:
        return self.cycle_count() == 1

    def cycle_order(self) -> tuple[int, ...]:
        """For an n-cycle, the orbit of 1 written (1 a2 ... an)."""
        if not self.is_ncycle():
            raise ParameterError("cycle_order is only defined for n-cycles")
        order = [1]
        while len(order) < self.size:
            order.append(self(order[-1]))
        return tuple(order)

    def to_cycle_notation(self) -> str:
        """Human form, e.g. "(1 3 2)". Fixed points are omitted; the identity is "()"."""
        parts = [
            "(" + " ".join(str(x) for x in cycle) + ")"
            for cycle in self.cycles().cycles
            if len(cycle) > 1
        ]
        return "".join(parts) or "()"

    def to_list(self) -> list[int]:
        return list(self.images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Returns p∘q, i.e. q acts first: (p∘q)(i) = p(q(i))."""
    if p.size != q.size:
        raise ParameterError(f"Cannot compose permutations of sizes {p.size} and {q.size}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def canonical_tau(n: int) -> Permutation:
    """The n-cycle (n ... 2 1): τ(1) = n and τ(i) = i - 1 for i >= 2."""
    if n < 1:
        raise ParameterError(f"canonical_tau needs n >= 1, got {n}")
    return Permutation((n,) + tuple(range(1, n)))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * (p.size + 1)
    cycles = []
    for start in range(1, p.size + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p.images[x - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def cycles_meeting_subset(p: Permutation, subset: Iterable[int]) -> int:
    """Number of distinct cycles of p that contain at least one element of `subset`."""
    index = cycle_decomposition(p).cycle_index()
    members = set(subset)
    for x in members:
        if x not in index:
            raise ParameterError(f"Element {x} is outside 1..{p.size}")
    return len({index[x] for x in members})


def _check_enumeration_guard(n: int) -> None:
    limit = get_settings().NCYCLE_ENUMERATION_LIMIT
    if not 1 <= n <= limit:
        raise GuardRangeError(f"n-cycle enumeration is limited to 1 <= n <= {limit}, got n={n}")


def enumerate_ncycles(n: int, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """
    Yields every n-cycle exactly once as (1 a2 ... an), with (a2, ..., an)
    running over the arrangements of {2..n} in lexicographic order.

    A non-empty `prefix` fixes the leading entries (a2, ..., a_{j+1}); the
    streams for all prefixes of one length partition the full stream.
    """
    _check_enumeration_guard(n)
    logger.debug(f"Enumerating {n}-cycles with prefix {tuple(prefix)}")
    for tail in ncycle_arrangements(n, prefix):
        yield Permutation.from_cycle_order((1,) + tail)


def ncycle_arrangements(n: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """The raw (a2, ..., an) tuples behind enumerate_ncycles."""
    prefix = tuple(prefix)
    if len(set(prefix)) != len(prefix) or any(not 2 <= x <= n for x in prefix):
        raise ParameterError(f"Prefix {prefix} is not a partial arrangement of 2..{n}")
    rest = [x for x in range(2, n + 1) if x not in prefix]
    for tail in itertools.permutations(rest):
        yield prefix + tail


def sample_ncycle_images(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draws `size` uniform n-cycles as a (size, n) array of 0-based images.

    Each row is the cycle (0 a2 ... a_{n}) with (a2 ... an) a uniform
    arrangement of {1..n-1}; that makes every one of the (n-1)! cycles equally
    likely.
    """
    if n < 1:
        raise ParameterError(f"sample_ncycle needs n >= 1, got {n}")
    tails = np.tile(np.arange(1, n, dtype=np.int64), (size, 1))
    tails = rng.permuted(tails, axis=1)
    order = np.concatenate([np.zeros((size, 1), dtype=np.int64), tails], axis=1)
    images = np.empty_like(order)
    np.put_along_axis(images, order, np.roll(order, -1, axis=1), axis=1)
    return images


def make_generator(seed: int) -> np.random.Generator:
    """A PCG64 generator for any 64-bit seed; negative seeds wrap modulo 2**64."""
    return np.random.default_rng(int(seed) % 2**64)


def sample_ncycle(n: int, seed: int, rng: Optional[np.random.Generator] = None) -> Permutation:
    """A uniformly random n-cycle, deterministic for a given seed."""
    generator = rng if rng is not None else make_generator(seed)
    images = sample_ncycle_images(n, 1, generator)[0]
    return Permutation(tuple(int(x) + 1 for x in images))
