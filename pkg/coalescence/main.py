# coalescence/main.py

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
import logging

from .config import settings
from .utils import setup_logging

setup_logging(settings.LOG_LEVEL)

from .api.probability import router as probability_router
from .routers.count_routes import router as count_router
from .routers.table_routes import router as table_router
from .routers.verify_routes import router as verify_router

logger = logging.getLogger("cycle_coalescence.main")


app = FastAPI(
    title="Cycle Coalescence API",
    description="Exact coalescence probabilities for products of two random n-cycles, with the verification suites behind them.",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.BACKEND_CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(probability_router, prefix="/api", tags=["Probability"])
app.include_router(table_router, prefix="/api", tags=["Table"])
app.include_router(count_router, prefix="/api", tags=["Counts"])
app.include_router(verify_router, prefix="/api", tags=["Verification"])


@app.get("/")
async def read_root():
    logger.info("API root endpoint hit.")
    return {"message": "Cycle Coalescence API is running!"}
