# coalescence/checks/identity_checks.py

from typing import List, Optional

from ..core import identities
from ..core.formulas import coalescence_closed
from ..core.report_processor import make_identity_report
from ..schemas import IdentityReport

SUITE = "identities"


def check_partition_sum(b_max: int = 15) -> IdentityReport:
    return make_identity_report(
        "partition_sum",
        SUITE,
        f"1 <= b <= {b_max}",
        (
            ({"b": b}, identities.partition_sum_expected(b), identities.verify_claim_partition_sum(b))
            for b in range(1, b_max + 1)
        ),
    )


def check_falling_factorial_expansion(b_max: int = 10, x_abs: int = 6) -> IdentityReport:
    def evaluations():
        for b in range(1, b_max + 1):
            for x in range(-x_abs, x_abs + 1):
                lhs, rhs = identities.verify_falling_factorial_expansion(b, x)
                yield {"b": b, "x": x}, rhs, lhs

    return make_identity_report(
        "falling_factorial_expansion", SUITE, f"1 <= b <= {b_max}, |x| <= {x_abs}", evaluations()
    )


def check_lemma_identity_1(n_max: int = 12) -> IdentityReport:
    return make_identity_report(
        "lemma_identity_1",
        SUITE,
        f"1 <= t <= k <= n <= {n_max}",
        (
            ({"n": n, "k": k, "t": t}, 0, identities.lemma_identity_1(n, k, t))
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
            for t in range(1, k + 1)
        ),
    )


def check_lemma_identity_2(p_abs: int = 12) -> IdentityReport:
    return make_identity_report(
        "lemma_identity_2",
        SUITE,
        f"{-p_abs} <= p <= {p_abs}",
        (
            ({"p": p}, identities.lemma_identity_2_expected(p), identities.lemma_identity_2(p))
            for p in range(-p_abs, p_abs + 1)
        ),
    )


def _pole_grid(k_max: int):
    for k in range(1, k_max + 1):
        for p in range(-k, k):
            yield p, k


def check_lemma_identity_3(k_max: int = 10) -> IdentityReport:
    return make_identity_report(
        "lemma_identity_3",
        SUITE,
        f"1 <= k <= {k_max}, -k <= p <= k-1",
        (
            ({"p": p, "k": k}, identities.lemma_identity_3_expected(p, k), identities.lemma_identity_3(p, k))
            for p, k in _pole_grid(k_max)
        ),
    )


def check_lemma_identity_4(k_max: int = 10) -> IdentityReport:
    return make_identity_report(
        "lemma_identity_4",
        SUITE,
        f"1 <= k <= {k_max}, -k <= p <= k-1",
        (
            ({"p": p, "k": k}, identities.lemma_identity_4_expected(p, k), identities.lemma_identity_4(p, k))
            for p, k in _pole_grid(k_max)
        ),
    )


def check_b_residue(k_max: int = 10) -> IdentityReport:
    return make_identity_report(
        "b_residue",
        SUITE,
        f"1 <= k <= {k_max}, -k <= p <= k-1",
        (
            ({"p": p, "k": k}, identities.b_residue_expected(p, k), identities.b_residue(p, k))
            for p, k in _pole_grid(k_max)
        ),
    )


def _shape_grid(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            yield n, k


def check_a_decomposition(n_max: int = 20) -> IdentityReport:
    def evaluations():
        for n, k in _shape_grid(n_max):
            sum_form, pf_form = identities.a_decomposition_check(n, k)
            yield {"n": n, "k": k}, pf_form, sum_form
        # The constant term binom(2k, k) is the limit of A as n grows.
        for k in range(1, n_max + 1):
            yield {"k": k, "limit": True}, 0, identities.a_limit_excess(k)

    return make_identity_report("a_decomposition", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_b_decomposition(n_max: int = 20) -> IdentityReport:
    def evaluations():
        for n, k in _shape_grid(n_max):
            sum_form, pf_form = identities.b_decomposition_check(n, k)
            yield {"n": n, "k": k}, pf_form, sum_form

    return make_identity_report("b_decomposition", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_coalescence_reconstruction(n_max: int = 20) -> IdentityReport:
    return make_identity_report(
        "coalescence_reconstruction",
        SUITE,
        f"1 <= k <= n <= {n_max}",
        (
            ({"n": n, "k": k}, coalescence_closed(n, k), identities.reconstruct_coalescence(n, k))
            for n, k in _shape_grid(n_max)
        ),
    )


def check_binomial_rewrite(n_max: int = 20) -> IdentityReport:
    return make_identity_report(
        "binomial_rewrite",
        SUITE,
        f"1 <= k <= n <= {n_max}",
        (
            ({"n": n, "k": k}, coalescence_closed(n, k), identities.coalescence_binomial_rewrite(n, k))
            for n, k in _shape_grid(n_max)
        ),
    )


def identity_checks(n_max: Optional[int] = None) -> List[tuple]:
    """(name, callable, kwargs) for every identity check; n_max bounds the n-indexed grids."""
    identity1_n = n_max or 12
    ab_n = n_max or 20
    return [
        ("partition_sum", check_partition_sum, {}),
        ("falling_factorial_expansion", check_falling_factorial_expansion, {}),
        ("lemma_identity_1", check_lemma_identity_1, {"n_max": identity1_n}),
        ("lemma_identity_2", check_lemma_identity_2, {}),
        ("lemma_identity_3", check_lemma_identity_3, {}),
        ("lemma_identity_4", check_lemma_identity_4, {}),
        ("b_residue", check_b_residue, {}),
        ("a_decomposition", check_a_decomposition, {"n_max": ab_n}),
        ("b_decomposition", check_b_decomposition, {"n_max": ab_n}),
        ("coalescence_reconstruction", check_coalescence_reconstruction, {"n_max": ab_n}),
        ("binomial_rewrite", check_binomial_rewrite, {"n_max": ab_n}),
    ]
