"""
Runtime configuration.

Caps and defaults live in a pydantic model so that environment overrides
are validated the same way as input files.
"""

import os
from contextlib import contextmanager
from typing import ClassVar, Dict, Iterator, Optional

from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Process-wide limits and defaults."""

    element_cap: int = Field(default=100_000, gt=0)
    subset_cap: int = Field(default=20, gt=0)
    closed_set_cap: int = Field(default=50_000, gt=0)
    multiplicity_cap: int = Field(default=12, gt=0)
    full_quantifier_cap: int = Field(default=12, gt=0)
    vector_cap: int = Field(default=500_000, gt=0)
    language: Optional[str] = None

    ENV_KEYS: ClassVar[Dict[str, str]] = {
        'element_cap': 'COVSPEC_ELEMENT_CAP',
        'subset_cap': 'COVSPEC_SUBSET_CAP',
        'closed_set_cap': 'COVSPEC_CLOSED_SET_CAP',
        'full_quantifier_cap': 'COVSPEC_FULL_QUANTIFIER_CAP',
        'vector_cap': 'COVSPEC_VECTOR_CAP',
        'language': 'COVSPEC_LANG',
    }

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from defaults plus COVSPEC_* environment variables."""
        values = {}
        for field_name, env_key in cls.ENV_KEYS.items():
            raw = os.environ.get(env_key)
            if raw:
                values[field_name] = raw
        return cls.model_validate(values)


# Global instance
_global_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance, reading the environment on first use."""
    global _global_settings
    if _global_settings is None:
        _global_settings = Settings.from_env()
    return _global_settings


@contextmanager
def override_settings(**changes) -> Iterator[Settings]:
    """
    Temporarily replace fields of the global settings.

    Usage:
        with override_settings(element_cap=500):
            ...
    """
    global _global_settings
    previous = get_settings()
    merged = previous.model_dump()
    merged.update({k: v for k, v in changes.items() if v is not None})
    _global_settings = Settings.model_validate(merged)
    try:
        yield _global_settings
    finally:
        _global_settings = previous
