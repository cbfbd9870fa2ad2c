# coalescence/core/identities.py

"""
Direct exact evaluation of the binomial and Stirling sums behind the
coalescence formula. Each function returns the value of the sum; the
closed forms it should equal live next to it and the suites in
coalescence.checks compare the two over parameter grids.
"""

from fractions import Fraction

from ..errors import ParameterError
from .arith import binomial_general as binom
from .arith import falling_factorial, factorial, sign, stirling_second


def _require_shape(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ParameterError(f"Need 1 <= k <= n, got n={n}, k={k}")


def _require_pole(p: int, k: int) -> None:
    if k < 1 or not -k <= p <= k - 1:
        raise ParameterError(f"Need k >= 1 and -k <= p <= k-1, got p={p}, k={k}")


# --- Partition sum ---


def verify_claim_partition_sum(b: int) -> Fraction:
    """Σ_{t=1}^{b} (-1)^{t-1} (t-1)! S(b, t); equals 1 for b = 1 and 0 otherwise."""
    if b < 1:
        raise ParameterError(f"Need b >= 1, got {b}")
    return Fraction(sum(sign(t - 1) * factorial(t - 1) * stirling_second(b, t) for t in range(1, b + 1)))


def partition_sum_expected(b: int) -> Fraction:
    return Fraction(1 if b == 1 else 0)


def verify_falling_factorial_expansion(b: int, x: int) -> tuple[int, int]:
    """(Σ_t S(b, t) x(x-1)...(x-t+1), x^b); the two agree for every integer x."""
    if b < 1:
        raise ParameterError(f"Need b >= 1, got {b}")
    lhs = sum(stirling_second(b, t) * falling_factorial(x, t) for t in range(1, b + 1))
    return lhs, x ** b


# --- The four binomial identities ---


def lemma_identity_1(n: int, k: int, t: int) -> Fraction:
    """Σ_{r=1-k}^{n+1} (-1)^r binom(r, t) binom(n+k, r+k-1) binom(n-r, k-t); always 0."""
    if not 1 <= t <= k <= n:
        raise ParameterError(f"Need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    return Fraction(sum(
        sign(r) * binom(r, t) * binom(n + k, r + k - 1) * binom(n - r, k - t)
        for r in range(1 - k, n + 2)
    ))


def lemma_identity_2(p: int) -> Fraction:
    """
    Σ_{t>=0} (-1)^t binom(p+t-1, t) binom(p+1, t), truncated at
    t = max(p+1, -p) beyond which every term vanishes.
    """
    upper = max(p + 1, -p)
    return Fraction(sum(sign(t) * binom(p + t - 1, t) * binom(p + 1, t) for t in range(upper + 1)))


def lemma_identity_2_expected(p: int) -> Fraction:
    return Fraction(1 if p in (-1, 0) else 0)


def _residue_inner(p: int, k: int, t: int) -> int:
    return sum(
        sign(rp) * binom(rp + t - 1, t) * binom(p + k, k - 1 - rp) * binom(p + rp, k - t)
        for rp in range(k)
    )


def lemma_identity_3(p: int, k: int) -> Fraction:
    """Double sum over t in [0, k] and r' in [0, k-1]; (-1)^k at p = -1 and 0 elsewhere."""
    _require_pole(p, k)
    return Fraction(sum(sign(t) * binom(p + t - 1, t) * _residue_inner(p, k, t) for t in range(k + 1)))


def lemma_identity_3_expected(p: int, k: int) -> Fraction:
    return Fraction(sign(k) if p == -1 else 0)


def lemma_identity_4(p: int, k: int) -> Fraction:
    """Σ_{r'=0}^{k-1} (-1)^{r'} binom(p+k, k-1-r') binom(p+r', k)."""
    _require_pole(p, k)
    return Fraction(sum(sign(rp) * binom(p + k, k - 1 - rp) * binom(p + rp, k) for rp in range(k)))


def lemma_identity_4_expected(p: int, k: int) -> Fraction:
    if p > 0:
        return Fraction(sign(k + p))
    if p == 0:
        return Fraction(0)
    return Fraction(sign(k + p + 1))


# --- A(n, k) and B(n, k) ---


def a_sum_form(n: int, k: int) -> Fraction:
    _require_shape(n, k)
    total = sum(sign(t) * binom(n + t - 1, t) * binom(n + 1, t) for t in range(1, k + 1))
    return Fraction(sign(k) * total, binom(n + k, 2 * k))


def a_partial_fraction_form(n: int, k: int) -> Fraction:
    _require_shape(n, k)
    tail = sum(
        (sign(i) * binom(2 * k - 1, k + i) * (Fraction(1, n - i) - Fraction(1, n + i + 1)) for i in range(1, k)),
        Fraction(0),
    )
    return binom(2 * k, k) + 2 * k * tail


def b_residue(p: int, k: int) -> Fraction:
    """Residue coefficient of B at the pole n = p, summed over t in [1, k]."""
    _require_pole(p, k)
    return Fraction(sum(sign(t) * binom(p + t - 1, t) * _residue_inner(p, k, t) for t in range(1, k + 1)))


def b_residue_expected(p: int, k: int) -> Fraction:
    """(-1)^{k+p+1} ([p > 0] - [p < -1])."""
    indicator = (1 if p > 0 else 0) - (1 if p < -1 else 0)
    return Fraction(sign(k + p + 1) * indicator)


def b_sum_form(n: int, k: int) -> Fraction:
    _require_shape(n, k)
    total = 0
    for t in range(1, k + 1):
        inner = sum(
            sign(rp) * binom(rp + t - 1, t) * binom(n + k, k - 1 - rp) * binom(n + rp, k - t)
            for rp in range(k)
        )
        total += sign(t) * binom(n + t - 1, t) * inner
    return Fraction(total, binom(n + k, 2 * k))


def b_partial_fraction_form(n: int, k: int) -> Fraction:
    _require_shape(n, k)
    tail = sum(
        (binom(2 * k - 1, k + i) * (Fraction(1, n - i) - Fraction(1, n + i + 1)) for i in range(1, k)),
        Fraction(0),
    )
    return 2 * k * tail


def a_decomposition_check(n: int, k: int) -> tuple[Fraction, Fraction]:
    return a_sum_form(n, k), a_partial_fraction_form(n, k)


def b_decomposition_check(n: int, k: int) -> tuple[Fraction, Fraction]:
    return b_sum_form(n, k), b_partial_fraction_form(n, k)


def reconstruct_coalescence(n: int, k: int) -> Fraction:
    """(A - (-1)^n B) / (k binom(2k, k)), built from the sum forms."""
    return (a_sum_form(n, k) - sign(n) * b_sum_form(n, k)) / (k * binom(2 * k, k))


def coalescence_binomial_rewrite(n: int, k: int) -> Fraction:
    """
    The colored-subset sum after absorbing 1/(n-r+1) into a binomial:
    (-1)^n / (k binom(2k,k) binom(n+k,2k)) Σ_t binom(n+t-1,t) Σ_{r=1}^{n} (-1)^r binom(r,t) binom(n+k,r+k-1) binom(n-r,k-t).
    """
    _require_shape(n, k)
    total = 0
    for t in range(1, k + 1):
        inner = sum(
            sign(r) * binom(r, t) * binom(n + k, r + k - 1) * binom(n - r, k - t)
            for r in range(1, n + 1)
        )
        total += binom(n + t - 1, t) * inner
    return Fraction(sign(n) * total, k * binom(2 * k, k) * binom(n + k, 2 * k))


def a_limit_excess(k: int) -> int:
    """
    2k-th finite difference in n of (A(n,k) - binom(2k,k)) binom(n+k,2k).

    That product is a polynomial of degree at most 2k in n, so the difference
    vanishes exactly when A(n,k) tends to binom(2k,k), the constant term of
    its partial-fraction form.
    """
    if k < 1:
        raise ParameterError(f"Need k >= 1, got {k}")

    def numerator(n: int) -> int:
        total = sum(sign(t) * binom(n + t - 1, t) * binom(n + 1, t) for t in range(1, k + 1))
        return sign(k) * total - binom(2 * k, k) * binom(n + k, 2 * k)

    return sum(sign(2 * k - j) * binom(2 * k, j) * numerator(j) for j in range(2 * k + 1))
