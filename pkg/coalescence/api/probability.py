# coalescence/api/probability.py

from fastapi import APIRouter, HTTPException, Query, status
from pydantic import ValidationError
from typing import Optional, Union
import logging
import traceback

from ..errors import BijectionError, ParameterError
from ..schemas import DistributionResult, MonteCarloResult, ProbabilityResult
from ..services.queries import distribution_query, probability_query

router = APIRouter()

logger = logging.getLogger("cycle_coalescence.api.probability")


@router.get("/probability", response_model=Union[ProbabilityResult, MonteCarloResult])
async def get_probability(
    n: int = Query(..., ge=1, examples=[4]),
    k: int = Query(..., ge=1, examples=[2]),
    method: str = Query("closed", examples=["closed"]),
    samples: Optional[int] = Query(None, ge=1),
    seed: Optional[int] = None,
    check: bool = False,
    decimal: Optional[int] = Query(None, ge=1, description="Significant digits of a decimal rendering."),
):
    """
    Probability that 1..k lie in one cycle of the product of two uniform n-cycles.
    Exact routes return a "num/den" string; "mc" returns an estimate with its standard error.
    """
    logger.info(f"API Request: GET /probability | n={n} k={k} method={method} check={check}")
    try:
        return probability_query(n, k, method=method, samples=samples, seed=seed, check=check, precision=decimal)
    except HTTPException:
        raise
    except (ParameterError, BijectionError, ValidationError) as e:
        logger.warning(f"Rejected probability request n={n} k={k} method={method}: {e}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(e))
    except Exception as e:
        logger.critical(f"CRITICAL Probability Error: unhandled exception for n={n} k={k} method={method}. Error: {e}")
        logger.error(traceback.format_exc())
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Internal Server Error while computing the probability: {e}",
        )


@router.get("/distribution", response_model=DistributionResult)
async def get_distribution(
    n: int = Query(..., ge=1, examples=[3]),
    method: str = Query("formula", examples=["formula"]),
):
    """Distribution of the number of cycles of the product, keyed by ν."""
    logger.info(f"API Request: GET /distribution | n={n} method={method}")
    try:
        return distribution_query(n, method)
    except HTTPException:
        raise
    except ParameterError as e:
        logger.warning(f"Rejected distribution request n={n} method={method}: {e}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(e))
    except Exception as e:
        logger.critical(f"CRITICAL Distribution Error: unhandled exception for n={n} method={method}. Error: {e}")
        logger.error(traceback.format_exc())
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Internal Server Error while computing the distribution: {e}",
        )
