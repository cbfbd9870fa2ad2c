# coalescence/schemas.py

from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, GetCoreSchemaHandler
from pydantic_core import core_schema

from .core.arith import as_rational
from .utils import format_rational, parse_rational


# --- Exact number types ---

class RationalString(Fraction):
    """
    Exact rational for pydantic v2 models.
    Accepts a Fraction, an int or a "num/den" string; always serializes to the
    exact string ("n" when the denominator is 1).
    """

    @classmethod
    def validate(cls, v: Any) -> Fraction:
        if isinstance(v, bool):
            raise ValueError("Booleans are not rationals")
        if isinstance(v, str):
            return parse_rational(v)
        if isinstance(v, (Fraction, int)):
            return as_rational(v)
        raise ValueError(f"Invalid rational type: {type(v).__name__}")

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type: Any, handler: GetCoreSchemaHandler) -> core_schema.CoreSchema:
        # JSON input is a string (or a bare integer); Python input may also be a Fraction.
        return core_schema.no_info_after_validator_function(
            cls.validate,
            core_schema.json_or_python_schema(
                json_schema=core_schema.union_schema([
                    core_schema.str_schema(),
                    core_schema.int_schema(strict=True),
                ]),
                python_schema=core_schema.union_schema([
                    core_schema.is_instance_schema(Fraction),
                    core_schema.int_schema(strict=True),
                    core_schema.str_schema(strict=True),
                ]),
            ),
            serialization=core_schema.plain_serializer_function_ser_schema(format_rational),
        )


class BigIntString(int):
    """Arbitrary-size integer carried as a decimal string on the wire."""

    @classmethod
    def validate(cls, v: Any) -> int:
        if isinstance(v, bool):
            raise ValueError("Booleans are not integers")
        if isinstance(v, int):
            return v
        text = v.strip()
        if text.lstrip("-").isdigit():
            return int(text)
        raise ValueError(f"Invalid integer string: '{v}'")

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type: Any, handler: GetCoreSchemaHandler) -> core_schema.CoreSchema:
        return core_schema.no_info_after_validator_function(
            cls.validate,
            core_schema.union_schema([
                core_schema.int_schema(strict=True),
                core_schema.str_schema(strict=True),
            ]),
            serialization=core_schema.to_string_ser_schema(),
        )


# --- Probability results ---

class ProbabilityResult(BaseModel):
    """An exact coalescence probability computed by one route."""
    n: int = Field(..., examples=[4])
    k: int = Field(..., examples=[2])
    method: str = Field(..., examples=["closed"])
    probability: RationalString = Field(..., examples=["7/18"])
    decimal: Optional[str] = Field(None, examples=["0.3888888889"])
    favorable: Optional[BigIntString] = Field(None, examples=["14"], description="Exhaustive routes only.")
    total: Optional[BigIntString] = Field(None, examples=["36"], description="Exhaustive routes only.")
    routes: Optional[Dict[str, RationalString]] = Field(
        None, description="Every route's value when a cross-check was requested."
    )
    agree: Optional[bool] = None


class MonteCarloResult(BaseModel):
    n: int = Field(..., examples=[50])
    k: int = Field(..., examples=[2])
    method: str = "mc"
    estimate: float = Field(..., examples=[0.4992])
    stderr: float = Field(..., examples=[0.0005])
    samples: int = Field(..., examples=[1000000])
    seed: int = Field(..., examples=[12345])
    reference: Optional[RationalString] = Field(None, description="Closed form, when a cross-check was requested.")
    within_five_stderr: Optional[bool] = None


class DistributionEntry(BaseModel):
    nu: int
    probability: RationalString


class DistributionResult(BaseModel):
    n: int = Field(..., examples=[3])
    method: str = Field(..., examples=["formula"])
    distribution: List[DistributionEntry] = Field(..., examples=[[{"nu": 1, "probability": "1/2"}]])


# --- Partial-fraction table ---

class PartialFractionTerm(BaseModel):
    pole: int = Field(..., examples=[1])
    coefficient: RationalString = Field(..., examples=["-2/3"])


class PartialFractionRowModel(BaseModel):
    k: int
    parity: str = Field(..., examples=["even"])
    constant: RationalString = Field(..., examples=["1/2"])
    terms: List[PartialFractionTerm] = []
    expression: str = Field(..., examples=["1/2 - (2/3)/(n-1) + (2/3)/(n+2)"])


class TableResult(BaseModel):
    k_max: int
    rows: List[PartialFractionRowModel]


# --- Counts ---

class CountResult(BaseModel):
    """Exact number of colored cycles or colored subsets of a given shape."""
    shape: str = Field(..., examples=["colored_cycles"])
    n: int = Field(..., examples=[3])
    r: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    svector: Optional[List[int]] = None
    count: BigIntString = Field(..., examples=["6"])


# --- Verification ---

class Counterexample(BaseModel):
    """The first grid point at which the two sides of a check disagree."""
    parameters: Dict[str, Any]
    expected: str
    actual: str


class IdentityReport(BaseModel):
    """Outcome of one check over its parameter grid."""
    name: str = Field(..., examples=["lemma_identity_2"])
    suite: str = Field(..., examples=["identities"])
    grid: str = Field(..., examples=["-12 <= p <= 12"])
    points: int = Field(..., examples=[25])
    failures: int = 0
    passed: bool
    counterexample: Optional[Counterexample] = None
    details: Dict[str, Any] = {}


class VerificationSummary(BaseModel):
    total_checks: int
    passed_checks: int
    failed_checks: int
    total_points: int


class VerificationRequest(BaseModel):
    suite: str = Field("all", examples=["identities"])
    n_max: Optional[int] = Field(None, examples=[5], ge=1)


class VerificationReport(BaseModel):
    suite: str
    n_max: Optional[int] = None
    passed: bool
    summary: VerificationSummary
    reports: List[IdentityReport] = []
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    model_config = {
        "json_schema_extra": {
            "example": {
                "suite": "identities",
                "n_max": None,
                "passed": True,
                "summary": {"total_checks": 1, "passed_checks": 1, "failed_checks": 0, "total_points": 15},
                "reports": [
                    {
                        "name": "partition_sum",
                        "suite": "identities",
                        "grid": "1 <= b <= 15",
                        "points": 15,
                        "failures": 0,
                        "passed": True,
                        "counterexample": None,
                        "details": {},
                    }
                ],
                "timestamp": "2026-01-01T00:00:00Z",
            }
        }
    }
