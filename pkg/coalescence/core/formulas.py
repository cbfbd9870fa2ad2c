# coalescence/core/formulas.py

"""
Closed forms for coalescence, separation and cycle-count statistics of a
product of two uniform n-cycles, and the colored-cycle counts they rest on.

Every function returns an exact Fraction or int. Parity cases are handled by
filtering summation indices, never by per-parity special formulas.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import ParameterError
from ..utils import format_rational
from .arith import binomial_general as binom
from .arith import factorial, sign, stirling_first_unsigned


def _require_k_in_range(n: int, k: int, k_min: int = 1) -> None:
    if n < 1 or not k_min <= k <= n:
        raise ParameterError(f"Need {k_min} <= k <= n, got n={n}, k={k}")


# --- Colored-cycle counts ---


def count_seq_colored(svector: Sequence[int]) -> int:
    """Number of colored n-cycles with color multiplicities `svector`: n!/(n-r+1)."""
    if not svector:
        raise ParameterError("s-vector must not be empty")
    if any(s < 1 for s in svector):
        raise ParameterError(f"s-vector entries must be positive, got {list(svector)}")
    n, r = sum(svector), len(svector)
    return factorial(n) // (n - r + 1)


def count_colored(n: int, r: int) -> int:
    """Number of r-colored n-cycles: binom(n-1, r-1) n!/(n-r+1)."""
    if not 1 <= r <= n:
        raise ParameterError(f"Need 1 <= r <= n, got n={n}, r={r}")
    return binom(n - 1, r - 1) * factorial(n) // (n - r + 1)


def _colored_subset_product(n: int, r: int, k: int, t: int) -> int:
    return (
        binom(n + t - 1, r + k - 1)
        * binom(r, t)
        * binom(k - 1, t - 1)
        * factorial(n) // (n - r + 1)
    )


def count_colored_subsets(n: int, r: int, k: int, t: int) -> int:
    """
    Number of t-colored k-subsets of r-colored n-cycles. Shapes with
    t > min(k, r) are empty and give 0.
    """
    if not (1 <= r <= n and 1 <= k <= n and t >= 1):
        raise ParameterError(f"Invalid shape (n={n}, r={r}, k={k}, t={t})")
    return _colored_subset_product(n, r, k, t)


# --- Coalescence probability ---


def _closed_form_terms(n: int, k: int):
    """(i, binom(2k-1, k+i)) for the summation indices with i of the opposite parity to n."""
    for i in range(1, k):
        if (i - n) % 2:
            yield i, binom(2 * k - 1, k + i)


def coalescence_closed(n: int, k: int) -> Fraction:
    """
    1/k + 4(-1)^n / binom(2k, k) * sum over i in 1..k-1, i and n of opposite
    parity, of binom(2k-1, k+i) (1/(n+i+1) - 1/(n-i)).
    """
    _require_k_in_range(n, k)
    total = sum(
        (c * (Fraction(1, n + i + 1) - Fraction(1, n - i)) for i, c in _closed_form_terms(n, k)),
        Fraction(0),
    )
    return Fraction(1, k) + Fraction(4 * sign(n), binom(2 * k, k)) * total


def coalescence_sum(n: int, k: int) -> Fraction:
    """
    Inclusion-exclusion over colorings: (-1)^n / ((n-1)! binom(n, k)) times
    the sum over t, r of (-1)^r / t times the number of t-colored k-subsets of
    r-colored n-cycles.
    """
    _require_k_in_range(n, k)
    total = Fraction(0)
    for t in range(1, k + 1):
        inner = sum(sign(r) * _colored_subset_product(n, r, k, t) for r in range(1, n + 1))
        total += Fraction(inner, t)
    return sign(n) * total / (factorial(n - 1) * binom(n, k))


def bona_pittel(n: int, k: int) -> Fraction:
    """1/k - 1/(n(n+1)) - (-1)^k / binom(n-1, k-1) * sum_i (-1)^i binom(n-1, i)/(i+k+1)."""
    _require_k_in_range(n, k)
    tail = sum(
        (Fraction(sign(i) * binom(n - 1, i), i + k + 1) for i in range(n - k + 1)),
        Fraction(0),
    )
    return Fraction(1, k) - Fraction(1, n * (n + 1)) - sign(k) * tail / binom(n - 1, k - 1)


def separation_probability(n: int, k: int) -> Fraction:
    """Probability that 1..k lie in k distinct cycles."""
    _require_k_in_range(n, k, k_min=2)
    value = Fraction(1, factorial(k))
    if (n - k) % 2 == 0:
        value += Fraction(2, factorial(k - 2) * (n - k + 1) * (n + k))
    return value


def kwak_lee_cycle_distribution(n: int) -> dict[int, Fraction]:
    """Distribution of the cycle count of the product: 2 c(n+1, ν)/(n+1)! on ν of n's parity."""
    if n < 1:
        raise ParameterError(f"Need n >= 1, got {n}")
    denominator = factorial(n + 1)
    return {
        nu: Fraction(2 * stirling_first_unsigned(n + 1, nu), denominator) if (n - nu) % 2 == 0 else Fraction(0)
        for nu in range(1, n + 1)
    }


# --- Partial-fraction rows ---


@dataclass(frozen=True)
class PartialFractionRow:
    """
    constant + sum of coefficient / (n - pole), for one parity of n.
    Terms are kept in descending pole order.
    """
    k: int
    parity: str
    constant: Fraction
    terms: tuple[tuple[int, Fraction], ...] = field(default=())

    def evaluate(self, n) -> Fraction:
        value = Fraction(self.constant)
        for pole, coefficient in self.terms:
            if n == pole:
                raise ParameterError(f"n = {n} is a pole of the k = {self.k} {self.parity} row")
            value += coefficient / (Fraction(n) - pole)
        return value

    def is_reflection_symmetric(self) -> bool:
        """True iff the row is unchanged by n -> -1-n, i.e. poles p and -1-p carry opposite coefficients."""
        coefficients = dict(self.terms)
        return all(coefficients.get(-1 - pole) == -c for pole, c in self.terms)

    def render(self) -> str:
        """Plain-text form, e.g. "1/2 - (2/3)/(n-1) + (2/3)/(n+2)"."""
        text = format_rational(self.constant)
        for pole, coefficient in self.terms:
            op = "-" if coefficient < 0 else "+"
            shift = f"n-{pole}" if pole > 0 else f"n+{-pole}"
            magnitude = format_rational(abs(coefficient))
            body = magnitude if coefficient.denominator == 1 else f"({magnitude})"
            text += f" {op} {body}/({shift})"
        return text


def _row(k: int, parity_of_n: int) -> PartialFractionRow:
    scale = Fraction(4, binom(2 * k, k)) * sign(parity_of_n)
    terms = []
    for i, c in _closed_form_terms(parity_of_n, k):
        terms.append((i, -scale * c))
        terms.append((-(i + 1), scale * c))
    terms.sort(key=lambda term: -term[0])
    return PartialFractionRow(
        k=k,
        parity="even" if parity_of_n == 0 else "odd",
        constant=Fraction(1, k),
        terms=tuple(terms),
    )


def partial_fraction_table(k: int) -> tuple[PartialFractionRow, PartialFractionRow]:
    """(even-n row, odd-n row) of the coalescence probability as a function of n."""
    if k < 1:
        raise ParameterError(f"Need k >= 1, got {k}")
    return _row(k, 0), _row(k, 1)
