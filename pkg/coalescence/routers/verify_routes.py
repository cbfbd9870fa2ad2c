# coalescence/routers/verify_routes.py

from fastapi import APIRouter, Body, HTTPException, status
import logging
import traceback

from ..core.verifier import run_suite
from ..errors import ParameterError
from ..schemas import VerificationReport, VerificationRequest

logger = logging.getLogger("cycle_coalescence.routers.verify_routes")

router = APIRouter()


@router.post("/verify", response_model=VerificationReport, summary="Run a verification suite")
async def verify(request: VerificationRequest = Body(...)):
    """
    Runs the requested suite and returns one report per check. A failing
    check is part of a normal 200 response: `passed` is false and the
    failing report carries its first counterexample.
    """
    logger.info(f"API Request: POST /verify | suite={request.suite} n_max={request.n_max}")
    try:
        return await run_suite(request.suite, request.n_max)
    except ParameterError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(e))
    except Exception as e:
        logger.critical(f"CRITICAL Verification Error: suite '{request.suite}' raised. Error: {e}")
        logger.error(traceback.format_exc())
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Internal Server Error during verification: {e}. Please check server logs for details.",
        )
