# coalescence/checks/bijection_checks.py

"""
Exhaustive and randomised roundtrips through the bijection chain, plus the
counting statements that follow from it.
"""

import itertools
import random
from collections import Counter, defaultdict
from typing import Any, Callable, List, Optional

from ..core import bijections as bij
from ..core.arith import binomial_general as binom
from ..core.colored import (
    ColoredSubsetInstance,
    colored_subset_census,
    compositions,
    enumerate_colored_cycles,
    enumerate_marked_strips,
    svector_of,
    validate_colored_cycle,
)
from ..core.formulas import count_colored_subsets, count_seq_colored
from ..core.report_processor import make_identity_report
from ..errors import BijectionError
from ..schemas import IdentityReport

SUITE = "bijections"


def _safely(fn: Callable, *args) -> Any:
    """Result of fn(*args), or the BijectionError it raised as text so the check reports it."""
    try:
        return fn(*args)
    except BijectionError as e:
        return f"{type(e).__name__}: {e}"


def _all_colored_cycles(n_max: int):
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            yield from enumerate_colored_cycles(n, r)


def check_full_roundtrip(n_max: int = 6) -> IdentityReport:
    """full_inverse(full_bijection(c)) == c for every colored cycle, and the image of each s-vector class has n!/(n-r+1) elements."""
    evaluations = []
    images = defaultdict(set)
    preimages: Counter = Counter()
    for c in _all_colored_cycles(n_max):
        pair = _safely(bij.full_bijection, c)
        params = {"sigma": c.sigma.to_cycle_notation(), "colors": list(c.colors)}
        if isinstance(pair, str):
            evaluations.append((params, c, pair))
            continue
        evaluations.append((params, c, _safely(bij.full_inverse, pair)))
        svector = svector_of(c)
        images[svector].add(pair)
        preimages[svector] += 1

    for svector in sorted(images):
        expected = count_seq_colored(svector)
        evaluations.append(({"svector": list(svector), "image": True}, expected, len(images[svector])))
        evaluations.append(({"svector": list(svector), "injective": True}, expected, preimages[svector]))

    details = {"roundtrips": sum(preimages.values()), "svectors": len(images)}
    return make_identity_report("full_roundtrip", SUITE, f"colored cycles with n <= {n_max}", evaluations, details)


def check_step_roundtrips(n_max: int = 6) -> IdentityReport:
    """Each step undone by its own inverse, and the last exits produced by step 2 always form a tree towards the root."""

    def evaluations():
        for c in _all_colored_cycles(n_max):
            params = {"sigma": c.sigma.to_cycle_notation(), "colors": list(c.colors)}
            g, tours = bij.step1_forward(c)
            yield {**params, "step": 1}, c, _safely(bij.step1_inverse, g, tours)

            structure = bij.step2_forward(g, tours)
            yield {**params, "step": 2, "structure": True}, None, _safely(structure.check)
            yield {**params, "step": 2}, tours, _safely(bij.step2_inverse, structure)

            pair = _safely(bij.step3_forward, structure)
            if isinstance(pair, str):
                yield {**params, "step": 3}, structure, pair
                continue
            yield {**params, "step": 3}, structure, _safely(bij.step3_inverse, pair)

    return make_identity_report("step_roundtrips", SUITE, f"colored cycles with n <= {n_max}", evaluations())


def check_inverse_direction(n_max: int = 6) -> IdentityReport:
    """Every sequence/cycle arrangement is hit: full_bijection(full_inverse(s)) == s, with independently counted classes."""
    evaluations = []
    arrangements = 0
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for svector in compositions(n, r):
                seen = 0
                for pair in bij.enumerate_sequence_cycle_pairs(svector):
                    seen += 1
                    c = _safely(bij.full_inverse, pair)
                    if isinstance(c, str):
                        evaluations.append(({"pair": pair.to_dict()}, pair, c))
                        continue
                    evaluations.append(({"pair": pair.to_dict()}, pair, _safely(bij.full_bijection, c)))
                arrangements += seen
                evaluations.append(({"svector": list(svector), "count": True}, count_seq_colored(svector), seen))

    return make_identity_report(
        "inverse_direction",
        SUITE,
        f"sequence/cycle arrangements with n <= {n_max}",
        evaluations,
        {"arrangements": arrangements},
    )


def check_random_roundtrips(samples: int = 10_000, n_max: int = 10, seed: int = 20240) -> IdentityReport:
    """Seeded random arrangements pulled back to colored cycles and pushed forward again."""
    rng = random.Random(seed)

    def evaluations():
        for index in range(samples):
            n = rng.randint(1, n_max)
            svector = bij.random_composition(n, rng)
            pair = bij.random_sequence_cycle_pair(svector, rng)
            params = {"sample": index, "pair": pair.to_dict()}
            c = _safely(bij.full_inverse, pair)
            if isinstance(c, str):
                yield params, pair, c
                continue
            yield {**params, "valid": True}, True, validate_colored_cycle(c.sigma, c.colors)
            forward = _safely(bij.full_bijection, c)
            yield params, pair, forward
            if not isinstance(forward, str):
                yield {**params, "back": True}, c, _safely(bij.full_inverse, forward)

    return make_identity_report(
        "random_roundtrips",
        SUITE,
        f"{samples} samples, n <= {n_max}, seed {seed}",
        evaluations(),
        {"samples": samples, "seed": seed},
    )


def check_extended_roundtrip(n_max: int = 5) -> IdentityReport:
    """Cut-and-sort of every colored subset is undone by extended_inverse, and each (r, k, t) class has the predicted size."""
    evaluations = []
    sizes: Counter = Counter()
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for base in enumerate_colored_cycles(n, r):
                for k in range(1, n + 1):
                    for subset in itertools.combinations(range(1, n + 1), k):
                        inst = ColoredSubsetInstance(base, subset)
                        sizes[(n, r, k, inst.t)] += 1
                        strip, _ = bij.extended_forward(inst)
                        params = inst.to_dict()
                        evaluations.append(({**params, "shape": True}, (k, inst.t), (strip.k, strip.t)))
                        evaluations.append((params, inst, _safely(bij.extended_inverse, strip, base)))

    for (n, r, k, t), size in sorted(sizes.items()):
        evaluations.append(({"n": n, "r": r, "k": k, "t": t}, count_colored_subsets(n, r, k, t), size))

    return make_identity_report(
        "extended_roundtrip",
        SUITE,
        f"colored subsets with n <= {n_max}",
        evaluations,
        {"instances": sum(sizes.values())},
    )


def _marked_strip_shapes(n_max: int):
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for k in range(1, n + 1):
                for t in range(1, min(k, r) + 1):
                    yield n, r, k, t


def check_strip_roundtrip(n_max: int = 6) -> IdentityReport:
    def evaluations():
        for n, r, k, t in _marked_strip_shapes(n_max):
            for strip in enumerate_marked_strips(n, r, k, t):
                params = {"n": n, **strip.to_dict()}
                triple = _safely(bij.strip_bijection, strip)
                if isinstance(triple, str):
                    yield params, strip, triple
                    continue
                yield params, strip, _safely(bij.strip_inverse, triple)

    return make_identity_report("strip_roundtrip", SUITE, f"marked strips with n <= {n_max}", evaluations())


def check_marked_strip_counts(n_max: int = 7) -> IdentityReport:
    """
    #marked strips of shape (n, r, k, t) = binom(n+t-1, r+k-1) binom(r, t) binom(k-1, t-1),
    and distinct strips give distinct triples.
    """

    def evaluations():
        for n, r, k, t in _marked_strip_shapes(n_max):
            strips = list(enumerate_marked_strips(n, r, k, t))
            expected = binom(n + t - 1, r + k - 1) * binom(r, t) * binom(k - 1, t - 1)
            triples = {bij.strip_bijection(strip) for strip in strips}
            yield {"n": n, "r": r, "k": k, "t": t}, expected, len(strips)
            yield {"n": n, "r": r, "k": k, "t": t, "distinct": True}, len(strips), len(triples)

    return make_identity_report("marked_strip_counts", SUITE, f"1 <= t <= k, r <= n <= {n_max}", evaluations())


def check_colored_subset_counts(n_max: int = 6) -> IdentityReport:
    """Exhaustive census of t-colored k-subsets of r-colored n-cycles against the product formula."""

    def evaluations():
        for n in range(1, n_max + 1):
            census = colored_subset_census(n)
            for r in range(1, n + 1):
                for k in range(1, n + 1):
                    for t in range(1, min(k, r) + 1):
                        yield {"n": n, "r": r, "k": k, "t": t}, count_colored_subsets(n, r, k, t), census[(r, k, t)]

    return make_identity_report("colored_subset_counts", SUITE, f"1 <= t <= k, r <= n <= {n_max}", evaluations())


def bijection_checks(n_max: Optional[int] = None) -> List[tuple]:
    """(name, callable, kwargs) for the bijection suite; n_max caps every exhaustive grid."""

    def capped(default: int) -> int:
        return min(n_max, default) if n_max else default

    return [
        ("full_roundtrip", check_full_roundtrip, {"n_max": capped(6)}),
        ("step_roundtrips", check_step_roundtrips, {"n_max": capped(6)}),
        ("inverse_direction", check_inverse_direction, {"n_max": capped(6)}),
        ("random_roundtrips", check_random_roundtrips, {"n_max": capped(10)}),
        ("extended_roundtrip", check_extended_roundtrip, {"n_max": capped(5)}),
        ("strip_roundtrip", check_strip_roundtrip, {"n_max": capped(6)}),
        ("marked_strip_counts", check_marked_strip_counts, {"n_max": capped(7)}),
        ("colored_subset_counts", check_colored_subset_counts, {"n_max": capped(6)}),
    ]
