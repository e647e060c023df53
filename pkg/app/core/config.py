# app/core/config.py
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Global configuration, read from NICHOLS_* environment variables and .env."""

    APP_NAME: str = "nichols-screen"

    # Enumeration bounds
    GROUP_SIZE_BOUND: int = 1_000_000
    SUBRACK_CLASS_BOUND: int = 120
    BRAID_CHECK_DEGREE: int = 12

    # Nichols Hilbert prefix: theta**degree may not exceed BUDGET
    BUDGET: int = 20_000
    MAX_DEGREE: int = 4

    # Scans
    JOBS: int = 1

    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="NICHOLS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
