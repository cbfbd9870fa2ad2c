# coalescence/config.py
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
import logging

logger = logging.getLogger("cycle_coalescence.config")


class Settings(BaseSettings):
    LOG_LEVEL: str = "INFO"

    # Enumeration guards. 11! is the practical ceiling for a desk-scale run.
    NCYCLE_ENUMERATION_LIMIT: int = 12
    COLORED_CYCLE_LIMIT: int = 7
    COLORED_SUBSET_LIMIT: int = 6
    ORACLE_LIMIT: int = 11

    VERIFY_WORKERS: int = 1
    MONTE_CARLO_BATCH: int = 16384

    BACKEND_CORS_ORIGINS: list[str] = [
        "http://localhost:5173",
        "http://127.0.0.1:5173",
    ]
    model_config = SettingsConfigDict(env_file=".env", env_prefix="COALESCENCE_", extra="ignore")


@lru_cache()
def get_settings() -> Settings:
    """
    Caches the settings object.
    """
    loaded = Settings()
    logger.debug(
        f"Settings loaded: oracle limit={loaded.ORACLE_LIMIT}, "
        f"workers={loaded.VERIFY_WORKERS}, mc batch={loaded.MONTE_CARLO_BATCH}"
    )
    return loaded


settings = get_settings()
