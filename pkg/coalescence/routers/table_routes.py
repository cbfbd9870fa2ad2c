# coalescence/routers/table_routes.py

from fastapi import APIRouter, HTTPException, Query, status
import logging

from ..errors import ParameterError
from ..schemas import TableResult
from ..services.queries import table_query

logger = logging.getLogger("cycle_coalescence.routers.table_routes")

router = APIRouter()


@router.get("/table", response_model=TableResult, summary="Partial-fraction rows of the coalescence probability")
async def get_table(k_max: int = Query(5, ge=1, le=200, examples=[5])):
    """Even-n and odd-n rows for k = 1..k_max, each as exact coefficients and as a printable expression."""
    try:
        return table_query(k_max)
    except ParameterError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(e))
    except Exception as e:
        logger.error(f"Error building the table for k_max={k_max}: {e}", exc_info=True)
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Could not build the table.",
        )
