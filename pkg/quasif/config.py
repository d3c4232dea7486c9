# quasif/config.py

"""Environment-driven settings (QUASIF_* variables, optionally from a .env file)."""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from quasif.errors import ConfigError

_TRUTHY = {"1", "true", "yes", "on"}


class Settings(BaseModel):
    log_level: str = "WARNING"
    workers: int = Field(default=1, ge=1)
    enum_cap: int = Field(default=10_000, ge=0)
    search_limit: int = Field(default=24, ge=1)
    monomial_limit: int = Field(default=10**7, ge=1)
    progress: bool = False


def _read_int(var: str, default: int) -> int:
    raw = os.getenv(var, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{var} must be an integer, got {raw!r}")


def _load_settings() -> Settings:
    load_dotenv()
    try:
        return Settings(
            log_level=os.getenv("QUASIF_LOG_LEVEL", "WARNING").strip().upper() or "WARNING",
            workers=_read_int("QUASIF_WORKERS", 1),
            enum_cap=_read_int("QUASIF_ENUM_CAP", 10_000),
            search_limit=_read_int("QUASIF_SEARCH_LIMIT", 24),
            monomial_limit=_read_int("QUASIF_MONOMIAL_LIMIT", 10**7),
            progress=os.getenv("QUASIF_PROGRESS", "").strip().lower() in _TRUTHY,
        )
    except ValidationError as e:
        field = e.errors()[0]["loc"][0]
        raise ConfigError(f"QUASIF_{str(field).upper()} is out of range: {e.errors()[0]['msg']}")


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get the process-wide Settings singleton.

    Returns:
        Settings read from the environment on first use
    """
    global _settings
    if _settings is None:
        _settings = _load_settings()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the next get_settings() re-reads the environment."""
    global _settings
    _settings = None
