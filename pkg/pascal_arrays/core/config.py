"""
Engine configuration settings based on environment variables
"""
import logging
from typing import Any

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables"""

    # Logging
    log_level: str = "WARNING"

    # Enumeration caps
    enumeration_cap: int = 10
    family_cap: int = 8
    cluster_max_rank: int = 6

    # Diagram algebras
    contour_mode: str = "blob"

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v: Any) -> Any:
        """Normalize the log level name"""
        if isinstance(v, str):
            level = v.strip().upper()
            if not isinstance(logging.getLevelName(level), int):
                raise ValueError(f"unknown log level {v!r}")
            return level
        return v

    @field_validator("contour_mode", mode="before")
    @classmethod
    def validate_contour_mode(cls, v: Any) -> Any:
        """Only the two reduction rules are understood"""
        if isinstance(v, str):
            mode = v.strip().lower()
            if mode not in ("blob", "cyclotomic"):
                raise ValueError(f"unknown contour mode {v!r}")
            return mode
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="PASCAL_",
        case_sensitive=False,
    )


# Create a global settings instance
settings = Settings()
