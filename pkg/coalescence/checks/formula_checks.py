# coalescence/checks/formula_checks.py

"""Agreement of the closed forms with each other and with the classical special cases."""

from fractions import Fraction
from typing import List, Optional

from ..core import formulas
from ..core.colored import compositions
from ..core.report_processor import make_identity_report
from ..schemas import IdentityReport

SUITE = "identities"


def check_route_agreement(n_max: int = 30) -> IdentityReport:
    def evaluations():
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                closed = formulas.coalescence_closed(n, k)
                yield {"n": n, "k": k, "route": "sum"}, closed, formulas.coalescence_sum(n, k)
                yield {"n": n, "k": k, "route": "bona_pittel"}, closed, formulas.bona_pittel(n, k)

    return make_identity_report("route_agreement", SUITE, f"1 <= k <= n <= {n_max}", evaluations())


def check_probability_bounds(n_max: int = 30) -> IdentityReport:
    return make_identity_report(
        "probability_bounds",
        SUITE,
        f"1 <= k <= n <= {n_max}",
        (
            ({"n": n, "k": k}, True, 0 <= formulas.coalescence_closed(n, k) <= 1)
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
        ),
    )


def stanley_k2(n: int) -> Fraction:
    if n % 2:
        return Fraction(1, 2)
    return Fraction(1, 2) - Fraction(2, (n - 1) * (n + 2))


def stanley_k3(n: int) -> Fraction:
    if n % 2:
        return Fraction(1, 3) + Fraction(1, (n - 2) * (n + 3))
    return Fraction(1, 3) - Fraction(3, (n - 1) * (n + 2))


def cangelmi(n: int) -> Fraction:
    return Fraction(2, n + 1) if n % 2 else Fraction(0)


def check_special_cases(n_max: int = 50) -> IdentityReport:
    def evaluations():
        for n in range(3, n_max + 1):
            yield {"n": n, "k": 2}, stanley_k2(n), formulas.coalescence_closed(n, 2)
            yield {"n": n, "k": 3}, stanley_k3(n), formulas.coalescence_closed(n, 3)
        for n in range(1, n_max + 1):
            yield {"n": n, "k": n}, cangelmi(n), formulas.coalescence_closed(n, n)

    return make_identity_report("special_cases", SUITE, f"3 <= n <= {n_max}", evaluations())


def check_separation_complement(n_max: int = 30) -> IdentityReport:
    return make_identity_report(
        "separation_complement",
        SUITE,
        f"2 <= n <= {n_max}, k = 2",
        (
            (
                {"n": n},
                Fraction(1),
                formulas.coalescence_closed(n, 2) + formulas.separation_probability(n, 2),
            )
            for n in range(2, n_max + 1)
        ),
    )


def check_partial_fraction_rows(k_max: int = 12, n_max: int = 30) -> IdentityReport:
    """Each row evaluates to the closed form at every n >= k of its parity, and is reflection symmetric."""
    def evaluations():
        for k in range(1, k_max + 1):
            even, odd = formulas.partial_fraction_table(k)
            yield {"k": k, "row": "even", "symmetric": True}, True, even.is_reflection_symmetric()
            yield {"k": k, "row": "odd", "symmetric": True}, True, odd.is_reflection_symmetric()
            for n in range(k, max(n_max, k + 20) + 1):
                row = even if n % 2 == 0 else odd
                yield {"k": k, "n": n}, formulas.coalescence_closed(n, k), row.evaluate(n)

    return make_identity_report("partial_fraction_rows", SUITE, f"1 <= k <= {k_max}", evaluations())


def check_kwak_lee_normalization(n_max: int = 30) -> IdentityReport:
    def evaluations():
        for n in range(1, n_max + 1):
            distribution = formulas.kwak_lee_cycle_distribution(n)
            yield {"n": n, "total": True}, Fraction(1), sum(distribution.values(), Fraction(0))
            off_parity = [nu for nu, p in distribution.items() if (n - nu) % 2 and p != 0]
            yield {"n": n, "off_parity": True}, [], off_parity

    return make_identity_report("kwak_lee_normalization", SUITE, f"1 <= n <= {n_max}", evaluations())


def check_colored_count_sums(n_max: int = 14) -> IdentityReport:
    """Summing the per-s-vector count over all compositions of n gives the r-colored total."""

    def evaluations():
        for n in range(1, n_max + 1):
            for r in range(1, n + 1):
                total = sum(formulas.count_seq_colored(s) for s in compositions(n, r))
                yield {"n": n, "r": r}, formulas.count_colored(n, r), total

    return make_identity_report("colored_count_sums", SUITE, f"1 <= r <= n <= {n_max}", evaluations())


def formula_checks(n_max: Optional[int] = None) -> List[tuple]:
    return [
        ("route_agreement", check_route_agreement, {"n_max": n_max or 30}),
        ("probability_bounds", check_probability_bounds, {"n_max": n_max or 30}),
        ("special_cases", check_special_cases, {"n_max": n_max or 50}),
        ("separation_complement", check_separation_complement, {"n_max": n_max or 30}),
        ("partial_fraction_rows", check_partial_fraction_rows, {}),
        ("kwak_lee_normalization", check_kwak_lee_normalization, {"n_max": n_max or 30}),
        ("colored_count_sums", check_colored_count_sums, {"n_max": min(n_max or 14, 14)}),
    ]
