import logging
from fractions import Fraction
from functools import lru_cache

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    # Application
    APP_NAME: str = "q-Serre Perturbation Lab"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Default scalar q (rational, |q| not in {0, 1})
    DEFAULT_Q: str = "2"

    # Search budgets
    SEED_SWEEP_BOUND: int = 12
    SEED_SWEEP_LIMIT: int = 20000
    ISO_SEARCH_BOUND: int = 2
    WITNESS_COEFF_BOUND: int = 2

    # Theorem scans
    SCAN_WORKERS: int = 1
    RANDOM_T_COUNT: int = 20
    RANDOM_SEED: int = 1729

    @model_validator(mode='after')
    def check_default_q(self) -> 'Settings':
        """Reject a default q that is not a usable rational."""
        try:
            q = Fraction(self.DEFAULT_Q)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"DEFAULT_Q is not a rational: {self.DEFAULT_Q!r}")
        if q == 0 or abs(q) == 1:
            raise ValueError(f"DEFAULT_Q must satisfy q != 0 and |q| != 1, got {q}")
        if min(self.SEED_SWEEP_BOUND, self.SEED_SWEEP_LIMIT, self.ISO_SEARCH_BOUND) < 1:
            raise ValueError("search bounds must be positive")
        if self.SCAN_WORKERS < 1:
            raise ValueError("SCAN_WORKERS must be at least 1")
        return self

    @property
    def default_q(self) -> Fraction:
        return Fraction(self.DEFAULT_Q)

    @property
    def log_level(self) -> int:
        if self.DEBUG:
            return logging.DEBUG
        level = logging.getLevelName(self.LOG_LEVEL.upper())
        return level if isinstance(level, int) else logging.WARNING

    # env_file is only loaded if it exists; environment variables ALWAYS take priority
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    settings = Settings()
    logger.debug(
        f"[CONFIG] Loaded settings - q: {settings.DEFAULT_Q}, "
        f"sweep bound: {settings.SEED_SWEEP_BOUND}, workers: {settings.SCAN_WORKERS}"
    )
    return settings
