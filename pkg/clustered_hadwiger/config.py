"""
Settings

Validated runtime settings. Values come from defaults and CLI flags only.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Settings(BaseModel):
    """Search budgets and log verbosity for one command run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    minor_budget: int = Field(default=200_000, ge=1)
    audit_budget: int = Field(default=200_000, ge=1)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level
