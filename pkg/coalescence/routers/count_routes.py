# coalescence/routers/count_routes.py

from fastapi import APIRouter, HTTPException, Query, status
from typing import Optional
import logging

from ..errors import ParameterError
from ..schemas import CountResult
from ..services.queries import count_query, parse_int_list

logger = logging.getLogger("cycle_coalescence.routers.count_routes")

router = APIRouter()


@router.get("/count", response_model=CountResult, summary="Number of colored cycles or colored subsets of a shape")
async def get_count(
    n: int = Query(..., ge=1, examples=[3]),
    r: Optional[int] = Query(None, examples=[3]),
    k: Optional[int] = None,
    t: Optional[int] = None,
    svector: Optional[str] = Query(None, examples=["5,2,4,1,2,2"], description="Comma-separated color multiplicities."),
):
    """
    Exactly one shape: `svector`, `r`, or `r` with `k` and `t`.
    Counts are returned as decimal strings.
    """
    try:
        parsed = parse_int_list(svector, "s-vector") if svector is not None else None
        return count_query(n, r=r, k=k, t=t, svector=parsed)
    except ParameterError as e:
        logger.warning(f"Rejected count request n={n} r={r} k={k} t={t} svector={svector}: {e}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(e))
    except Exception as e:
        logger.error(f"Error counting shape n={n} r={r} k={k} t={t} svector={svector}: {e}", exc_info=True)
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Could not compute the count.",
        )
