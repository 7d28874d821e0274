# =============================================================================
# utilities/config.py
# =============================================================================
# Purpose:
# Runtime settings for the CLI and the default budgets of the searches.
# A `.env` file in the working directory is loaded first, then FORGE_*
# environment variables are read into a pydantic Settings model.
# Command-line flags override whatever this module returns.
# =============================================================================

import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator

load_dotenv()

ENV_PREFIX = "FORGE_"


class Settings(BaseModel):
    max_len: int = 16
    max_steps: int = 200_000
    max_area: int = 16
    max_cosets: int = 10_000
    rips_blocks: int = 8
    twist_power: int = 2
    log_level: str = "WARNING"

    # Reserved; every algorithm here is deterministic
    seed: int | None = None

    @field_validator("max_len", "max_steps", "max_area", "max_cosets", "twist_power")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("budgets must be positive")
        return value

    @field_validator("rips_blocks")
    @classmethod
    def _enough_blocks(cls, value: int) -> int:
        if value < 8:
            raise ValueError("FORGE_RIPS_BLOCKS must be at least 8")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level {value!r}")
        return value


def load_settings(environ: dict[str, str] | None = None) -> Settings:
    """Settings from FORGE_* variables; unset or empty variables keep the defaults."""
    environ = os.environ if environ is None else environ
    values = {}
    for field in Settings.model_fields:
        raw = environ.get(ENV_PREFIX + field.upper())
        if raw:
            values[field] = raw
    return Settings.model_validate(values)
