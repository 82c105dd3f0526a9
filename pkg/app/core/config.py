from typing import List
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # API
    API_V1_STR: str = "/api/v1"
    PROJECT_NAME: str = "Resonance Polynomials"

    # CORS
    BACKEND_CORS_ORIGINS: List[str] = ["http://localhost:3000", "http://localhost:5173"]

    # Logging
    LOG_LEVEL: str = "INFO"

    # Verification budgets
    MAX_VERTICES: int = 400
    MAX_RESONANCE_VERTICES: int = 5000

    # Worker cap for anchor-parallel searches; never changes outputs
    THREADS: int = 1

    # Largest coefficient a polynomial may carry (signed 64-bit)
    COEFFICIENT_LIMIT: int = 2**63 - 1

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="allow"
    )


settings = Settings()
