# coalescence/core/arith.py

"""
Exact integer and rational arithmetic for every formula in the package.

Integers are Python ints (arbitrary precision); rationals are
`fractions.Fraction`, which is reduced on construction and keeps a positive
denominator, so two equal probabilities always compare equal structurally.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ..errors import ParameterError

BigInt = int
ExactRational = Fraction
RationalLike = Union[Fraction, int]


def binomial_general(a: int, b: int) -> BigInt:
    """
    Generalized binomial coefficient a(a-1)...(a-b+1)/b!.

    The upper index may be any integer; a negative lower index gives 0.
    For a < 0 the reflection binom(a, b) = (-1)^b binom(b-a-1, b) is used.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    value = math.comb(b - a - 1, b)
    return -value if b % 2 else value


def factorial(n: int) -> BigInt:
    if n < 0:
        raise ParameterError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def falling_factorial(x: int, t: int) -> BigInt:
    """x(x-1)...(x-t+1); the empty product for t = 0."""
    if t < 0:
        raise ParameterError(f"falling factorial needs t >= 0, got {t}")
    return math.prod(x - j for j in range(t))


def sign(exponent: int) -> int:
    """(-1)^exponent for any integer exponent."""
    return -1 if exponent % 2 else 1


@lru_cache(maxsize=None)
def _stirling_second(b: int, t: int) -> int:
    if b == t:
        return 1
    if t == 0 or t > b:
        return 0
    return t * _stirling_second(b - 1, t) + _stirling_second(b - 1, t - 1)


@lru_cache(maxsize=None)
def _stirling_first(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return (n - 1) * _stirling_first(n - 1, k) + _stirling_first(n - 1, k - 1)


def stirling_second(b: int, t: int) -> BigInt:
    """Number of partitions of a b-element set into exactly t blocks."""
    if b < 1 or t < 1:
        raise ParameterError(f"stirling_second needs b, t >= 1, got ({b}, {t})")
    return _stirling_second(b, t)


def stirling_first_unsigned(n: int, k: int) -> BigInt:
    """Number of permutations of an n-element set with exactly k cycles."""
    if n < 1 or k < 1:
        raise ParameterError(f"stirling_first_unsigned needs n, k >= 1, got ({n}, {k})")
    return _stirling_first(n, k)


def bell(b: int) -> BigInt:
    """Number of set partitions of a b-element set (b >= 1)."""
    return sum(stirling_second(b, t) for t in range(1, b + 1))


def as_rational(value: RationalLike) -> ExactRational:
    if isinstance(value, float):
        raise TypeError("Floats are not accepted in exact arithmetic.")
    return Fraction(value)
