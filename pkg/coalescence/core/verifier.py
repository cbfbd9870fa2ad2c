# coalescence/core/verifier.py

import asyncio
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from ..checks.bijection_checks import bijection_checks
from ..checks.formula_checks import formula_checks
from ..checks.identity_checks import identity_checks
from ..checks.oracle_checks import oracle_checks
from ..config import get_settings
from ..errors import ParameterError
from ..schemas import IdentityReport, VerificationReport
from .report_processor import process_verification_data

logger = logging.getLogger("cycle_coalescence.core.verifier")

PlannedCheck = Tuple[str, Callable[..., IdentityReport], dict]

SUITES: Dict[str, Tuple[Callable[[Optional[int]], List[PlannedCheck]], ...]] = {
    "identities": (identity_checks, formula_checks),
    "bijections": (bijection_checks,),
    "oracle": (oracle_checks,),
}
SUITE_NAMES = (*SUITES, "all")


def planned_checks(suite: str, n_max: Optional[int] = None) -> List[PlannedCheck]:
    """Every check the suite runs, in report order."""
    if suite not in SUITE_NAMES:
        raise ParameterError(f"Unknown suite '{suite}'; choose one of {', '.join(SUITE_NAMES)}")
    if n_max is not None and n_max < 1:
        raise ParameterError(f"Need n_max >= 1, got {n_max}")
    names = list(SUITES) if suite == "all" else [suite]
    return [check for name in names for registry in SUITES[name] for check in registry(n_max)]


def _run_check(name: str, fn: Callable[..., IdentityReport], kwargs: dict) -> IdentityReport:
    started = time.perf_counter()
    report = fn(**kwargs)
    logger.info(
        f"Check '{name}' {'passed' if report.passed else 'FAILED'}: "
        f"{report.points} points in {time.perf_counter() - started:.2f}s"
    )
    return report


def _make_executor(workers: int) -> Executor:
    if workers > 1:
        return ProcessPoolExecutor(max_workers=workers)
    return ThreadPoolExecutor(max_workers=1)


async def run_suite(suite: str, n_max: Optional[int] = None) -> VerificationReport:
    """
    Runs every check of a suite on a worker pool.

    Args:
        suite: "identities", "bijections", "oracle" or "all".
        n_max: Optional cap on the n-indexed grids; each check keeps its own default otherwise.

    Returns:
        VerificationReport: one IdentityReport per check, in planning order
        whatever order the workers finish in.
    """
    checks = planned_checks(suite, n_max)
    workers = max(1, get_settings().VERIFY_WORKERS)
    logger.info(f"Starting verification suite '{suite}' (n_max={n_max}): {len(checks)} checks on {workers} worker(s)")

    loop = asyncio.get_running_loop()
    with _make_executor(workers) as pool:
        reports = await asyncio.gather(
            *(loop.run_in_executor(pool, _run_check, name, fn, kwargs) for name, fn, kwargs in checks)
        )

    result = process_verification_data(suite, n_max, list(reports))
    logger.info(f"Verification suite '{suite}' finished: {'passed' if result.passed else 'FAILED'}")
    return result


def run_verification(suite: str, n_max: Optional[int] = None) -> VerificationReport:
    """Synchronous entry point for the CLI."""
    return asyncio.run(run_suite(suite, n_max))
