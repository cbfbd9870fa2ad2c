# coalescence/core/report_processor.py

import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..schemas import Counterexample, IdentityReport, VerificationReport, VerificationSummary
from ..utils import format_rational

logger = logging.getLogger("cycle_coalescence.core.report_processor")

# (grid point parameters, expected value, actual value)
Evaluation = Tuple[Dict[str, Any], Any, Any]


def render_value(value: Any) -> str:
    """Exact text form of a check operand: rationals as "num/den", containers element-wise."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{key}: {render_value(v)}" for key, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(render_value(v) for v in value) + ")"
    return str(value)


def make_identity_report(
    name: str,
    suite: str,
    grid: str,
    evaluations: Iterable[Evaluation],
    details: Optional[Dict[str, Any]] = None,
) -> IdentityReport:
    """
    Compares expected and actual at every grid point.

    Args:
        name: Check name as shown in reports.
        suite: Suite the check belongs to.
        grid: Human description of the parameter grid.
        evaluations: (parameters, expected, actual) triples; consumed lazily.
        details: Extra counters to attach (roundtrip counts, census sizes, ...).

    Returns:
        IdentityReport: passed iff every point agrees, with the first
        disagreement kept as the counterexample.
    """
    points = 0
    failures = 0
    counterexample: Optional[Counterexample] = None
    for parameters, expected, actual in evaluations:
        points += 1
        if expected == actual:
            continue
        failures += 1
        if counterexample is None:
            counterexample = Counterexample(
                parameters=parameters,
                expected=render_value(expected),
                actual=render_value(actual),
            )
            logger.warning(
                f"Check '{name}' failed at {parameters}: expected {counterexample.expected}, got {counterexample.actual}"
            )

    logger.debug(f"Check '{name}' over {grid}: {points} points, {failures} failures")
    return IdentityReport(
        name=name,
        suite=suite,
        grid=grid,
        points=points,
        failures=failures,
        passed=failures == 0,
        counterexample=counterexample,
        details=details or {},
    )


def summarize_reports(reports: List[IdentityReport]) -> VerificationSummary:
    passed = sum(1 for report in reports if report.passed)
    summary = VerificationSummary(
        total_checks=len(reports),
        passed_checks=passed,
        failed_checks=len(reports) - passed,
        total_points=sum(report.points for report in reports),
    )
    logger.info(
        f"Verification summary: checks={summary.total_checks}, passed={summary.passed_checks}, "
        f"failed={summary.failed_checks}, points={summary.total_points}"
    )
    return summary


def process_verification_data(suite: str, n_max: Optional[int], reports: List[IdentityReport]) -> VerificationReport:
    """Combines the per-check reports of one run into the final VerificationReport."""
    summary = summarize_reports(reports)
    return VerificationReport(
        suite=suite,
        n_max=n_max,
        passed=summary.failed_checks == 0,
        summary=summary,
        reports=reports,
    )
