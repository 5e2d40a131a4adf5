"""
DGKIT CONFIGURATION

Settings loaded from the environment (prefix DGKIT_) and an optional .env file.
Command-line flags override these values.
"""

from __future__ import annotations

from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings."""

    model_config = SettingsConfigDict(
        env_prefix="DGKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Coefficients: "Q" or "Fp:<prime>"
    default_field: str = "Q"

    # Drinfeld quotients
    default_depth: int = 3

    # Quiver path enumeration gives up past this length
    path_length_cap: int = 12

    # Largest degree span any complex may occupy
    max_degree_span: int = 64

    # Perfectness search
    search_max_length: int = 8

    # Property suites and the fuzz command
    default_seed: int = 0

    log_level: str = "WARNING"

    @field_validator("default_depth")
    @classmethod
    def validate_depth(cls, v: int) -> int:
        if v < 2:
            raise ValueError("default_depth must be at least 2")
        return v

    @field_validator("default_field")
    @classmethod
    def validate_field(cls, v: str) -> str:
        if v != "Q" and not v.startswith("Fp:"):
            raise ValueError(f"field must be 'Q' or 'Fp:<prime>', got {v!r}")
        return v


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
