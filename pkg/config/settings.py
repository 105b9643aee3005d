from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Centralized runtime configuration loaded from environment and .env."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
    )

    LOG_LEVEL: str = Field(
        default="WARNING",
        description="Level for the project logger; --verbose lowers it to INFO",
    )

    # Engine size caps
    BRUTE_FORCE_MAX_VERTICES: int = Field(default=40, gt=0)
    BRUTE_FORCE_MAX_WEIGHTED_VERTICES: int = Field(default=24, gt=0)
    PERMANENT_MAX_SIDE: int = Field(default=16, gt=0)
    CUBE_MAX_DIMENSION: int = Field(default=5, ge=1)
    DIMER_MAX_CELLS: int = Field(default=40, gt=0)
    TABLEAUX_MAX_CELLS: int = Field(default=30, gt=0)
    INVSUM_MAX_ORDER: int = Field(default=8, ge=1)

    # Factorization
    FACTOR_TRIAL_LIMIT: int = Field(default=1_000_000, ge=2)
    FACTOR_RHO_SEED: int = Field(default=1234)
    FACTOR_RHO_RETRIES: int = Field(default=8, gt=0)
    SQUARE_FREE_SMALL_LIMIT: int = Field(
        default=100,
        gt=1,
        description="Largest square-free cofactor reported as SQUARE_TIMES_SMALL",
    )
    ROUNDNESS_OUTLIER_RATIO: int = Field(
        default=4,
        gt=0,
        description="Largest prime above this multiple of n is flagged as an outlier",
    )

    # Analysis and reporting
    PROBABILITY_DIGITS: int = Field(default=2, ge=0, le=30)
    FIT_HELDOUT: int = Field(default=2, ge=0)
    RECURRENCE_MAX_ORDER: int = Field(default=6, ge=1)
    SWEEP_JOBS: int = Field(default=1, ge=1)


settings = Settings()
