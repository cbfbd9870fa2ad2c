# coalescence/services/queries.py

"""
Query layer shared by the CLI and the HTTP routers. Each function validates
its parameters, runs the computation and returns the wire model, so both
surfaces emit identical documents.
"""

import logging
import re
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple, Union

from ..config import get_settings
from ..core import formulas, oracle
from ..core.bijections import trace_pipeline
from ..core.colored import make_colored_cycle
from ..core.permutations import Permutation
from ..errors import ParameterError
from ..schemas import (
    CountResult,
    DistributionEntry,
    DistributionResult,
    MonteCarloResult,
    PartialFractionRowModel,
    PartialFractionTerm,
    ProbabilityResult,
    TableResult,
)
from ..utils import render_decimal

logger = logging.getLogger("cycle_coalescence.services.queries")

EXACT_ROUTES = {
    "closed": formulas.coalescence_closed,
    "sum": formulas.coalescence_sum,
    "bona-pittel": formulas.bona_pittel,
}
METHODS = (*EXACT_ROUTES, "brute", "mc")
DISTRIBUTION_METHODS = ("formula", "brute")

# A --check includes the exhaustive route up to this n; beyond it the census takes minutes.
BRUTE_CHECK_LIMIT = 9
DEFAULT_SAMPLES = 1_000_000


# --- Parsing helpers ---


def parse_int_list(text: str, what: str = "list") -> Tuple[int, ...]:
    """'5,2,4' or '5 2 4' -> (5, 2, 4)."""
    parts = [p for p in re.split(r"[,\s]+", text.strip().strip("()[]")) if p]
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as e:
        raise ParameterError(f"Invalid {what} '{text}': expected integers separated by commas") from e
    if not values:
        raise ParameterError(f"Empty {what}")
    return values


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    """
    Accepts cycle notation "(1 3 2)(4 5)" or a bare cycle "1 3 2". The size
    is n when given, otherwise the largest element mentioned.
    """
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups:
        groups = [text]
    cycles = [parse_int_list(group, "cycle") for group in groups if group.strip()]
    if not cycles:
        raise ParameterError(f"No cycle found in '{text}'")
    size = n if n is not None else max(max(c) for c in cycles)
    return Permutation.from_cycles(size, cycles)


# --- Probabilities ---


def _decimal(value: Fraction, precision: Optional[int]) -> Optional[str]:
    if precision is None:
        return None
    try:
        return render_decimal(value, precision)
    except ValueError as e:
        raise ParameterError(str(e)) from e


def probability_query(
    n: int,
    k: int,
    method: str = "closed",
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    check: bool = False,
    precision: Optional[int] = None,
) -> Union[ProbabilityResult, MonteCarloResult]:
    """
    Coalescence probability of 1..k in σ∘τ by the requested route.

    Args:
        n, k: Shape, 1 <= k <= n.
        method: One of METHODS.
        samples, seed: Monte-Carlo only; the seed is mandatory.
        check: Evaluate every exact route (and the exhaustive one when n is
            small enough) and report whether they agree.
        precision: Significant digits of an additional decimal rendering.

    Returns:
        ProbabilityResult, or MonteCarloResult for method "mc".
    """
    if method not in METHODS:
        raise ParameterError(f"Unknown method '{method}'; choose one of {', '.join(METHODS)}")

    if method == "mc":
        if seed is None:
            raise ParameterError("Monte-Carlo needs an explicit --seed")
        samples = DEFAULT_SAMPLES if samples is None else samples
        estimate = oracle.monte_carlo_coalescence(n, k, samples, seed)
        reference = within = None
        if check:
            reference = formulas.coalescence_closed(n, k)
            within = abs(Fraction(estimate.estimate) - reference) <= 5 * Fraction(estimate.stderr)
        return MonteCarloResult(
            n=n,
            k=k,
            estimate=estimate.estimate,
            stderr=estimate.stderr,
            samples=samples,
            seed=seed,
            reference=reference,
            within_five_stderr=within,
        )

    favorable = total = None
    if method == "brute":
        counted = oracle.brute_force_coalescence(n, k)
        probability, favorable, total = counted.probability, counted.favorable, counted.total
    else:
        probability = EXACT_ROUTES[method](n, k)

    routes: Optional[Dict[str, Fraction]] = None
    agree: Optional[bool] = None
    if check:
        routes = {name: route(n, k) for name, route in EXACT_ROUTES.items()}
        if n <= min(BRUTE_CHECK_LIMIT, get_settings().ORACLE_LIMIT):
            routes["brute"] = probability if method == "brute" else oracle.brute_force_coalescence(n, k).probability
        agree = all(value == probability for value in routes.values())
        if not agree:
            logger.warning(f"Routes disagree for n={n}, k={k}: {routes}")

    return ProbabilityResult(
        n=n,
        k=k,
        method=method,
        probability=probability,
        decimal=_decimal(probability, precision),
        favorable=favorable,
        total=total,
        routes=routes,
        agree=agree,
    )


def distribution_query(n: int, method: str = "formula") -> DistributionResult:
    """Distribution of the cycle count of σ∘τ, from the Stirling-number formula or by exhaustion."""
    if method not in DISTRIBUTION_METHODS:
        raise ParameterError(f"Unknown method '{method}'; choose one of {', '.join(DISTRIBUTION_METHODS)}")
    if method == "formula":
        distribution = formulas.kwak_lee_cycle_distribution(n)
    else:
        distribution = oracle.brute_force_cycle_dist(n)
    return DistributionResult(
        n=n,
        method=method,
        distribution=[DistributionEntry(nu=nu, probability=p) for nu, p in sorted(distribution.items())],
    )


# --- Partial-fraction table ---


def row_model(row: formulas.PartialFractionRow) -> PartialFractionRowModel:
    return PartialFractionRowModel(
        k=row.k,
        parity=row.parity,
        constant=row.constant,
        terms=[PartialFractionTerm(pole=pole, coefficient=c) for pole, c in row.terms],
        expression=row.render(),
    )


def table_query(k_max: int) -> TableResult:
    """Even-n and odd-n partial-fraction rows for k = 1..k_max."""
    if k_max < 1:
        raise ParameterError(f"Need k_max >= 1, got {k_max}")
    rows = []
    for k in range(1, k_max + 1):
        even, odd = formulas.partial_fraction_table(k)
        rows.extend([row_model(even), row_model(odd)])
    return TableResult(k_max=k_max, rows=rows)


# --- Counts ---


def count_query(
    n: int,
    r: Optional[int] = None,
    k: Optional[int] = None,
    t: Optional[int] = None,
    svector: Optional[Sequence[int]] = None,
) -> CountResult:
    """
    Exact count for exactly one shape: an s-vector, an r-coloring, or an
    r-coloring with a t-colored k-subset.
    """
    if svector is not None:
        if r is not None or k is not None or t is not None:
            raise ParameterError("--svector cannot be combined with --r, --k or --t")
        svector = tuple(svector)
        if sum(svector) != n:
            raise ParameterError(f"s-vector {list(svector)} sums to {sum(svector)}, not n={n}")
        return CountResult(
            shape="svector", n=n, r=len(svector), svector=list(svector), count=formulas.count_seq_colored(svector)
        )

    if r is None:
        raise ParameterError("Give one shape: --svector, --r, or --r with --k and --t")
    if k is None and t is None:
        return CountResult(shape="colored_cycles", n=n, r=r, count=formulas.count_colored(n, r))
    if k is None or t is None:
        raise ParameterError("--k and --t must be given together")
    return CountResult(
        shape="colored_subsets", n=n, r=r, k=k, t=t, count=formulas.count_colored_subsets(n, r, k, t)
    )


# --- Bijection trace ---


def trace_query(sigma: str, colors: str) -> Dict[str, Any]:
    """Every intermediate structure of the bijection chain for one colored cycle."""
    color_values = parse_int_list(colors, "color list")
    permutation = parse_permutation(sigma, n=len(color_values))
    return trace_pipeline(make_colored_cycle(permutation, color_values))
