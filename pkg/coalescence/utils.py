# coalescence/utils.py

import logging
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Union

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configures package-wide logging on stderr.

    stdout is reserved for command output (rationals, JSON, tables), so every
    handler installed here writes to stderr.
    """
    if level is None:
        from .config import settings
        level = settings.LOG_LEVEL

    logging.basicConfig(level=level.upper(), stream=sys.stderr, format=LOG_FORMAT, force=True)
    # Keep the third-party chatter out of verification runs.
    logging.getLogger("httpx").setLevel(logging.WARNING)
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)


def format_rational(value: Union[Fraction, int]) -> str:
    """Exact string form: "num/den", or "num" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parses "num/den" or "num" into a reduced Fraction.

    Floats and decimal points are rejected: nothing approximate may enter an
    exact computation.
    """
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"Not an exact rational: '{text}'")
    num, sep, den = cleaned.partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError as e:
        raise ValueError(f"Not an exact rational: '{text}'") from e
    if denominator == 0:
        raise ValueError(f"Zero denominator in '{text}'")
    return Fraction(numerator, denominator)


def render_decimal(value: Fraction, precision: int) -> str:
    """Renders a rational with `precision` significant digits (display only)."""
    if precision < 1:
        raise ValueError("Decimal precision must be at least 1.")
    with localcontext() as ctx:
        ctx.prec = precision
        return str(Decimal(value.numerator) / Decimal(value.denominator))
