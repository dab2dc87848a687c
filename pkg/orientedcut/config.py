"""Run settings: defaults, ORC_* environment overrides, flag overrides."""

import dataclasses
import os
from dataclasses import dataclass, fields
from typing import Optional

from .errors import ConfigError
from .rational import dyadic

ENV_PREFIX = "ORC_"
FORMATS = ("text", "records")


@dataclass(frozen=True)
class Settings:
    fuel: int = 1024
    # resolution as an exponent: probe step is 2**-grid
    grid: int = 7
    corpus: Optional[str] = None
    format: str = "text"
    workers: int = 1
    prefix_length: int = 128
    samples: int = 100
    limit_span: int = 16
    verbosity: int = 0

    def __post_init__(self):
        for name in ("fuel", "grid", "prefix_length", "samples", "limit_span", "verbosity"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative, got {getattr(self, name)}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")

    @property
    def step(self):
        return dyadic(self.grid)

    @classmethod
    def from_env(cls, environ=None, **overrides):
        """Defaults, then ORC_<FIELD> variables, then non-None overrides."""
        environ = os.environ if environ is None else environ
        values = {}
        for field in fields(cls):
            key = ENV_PREFIX + field.name.upper()
            raw = environ.get(key)
            if raw is None or raw == "":
                continue
            values[field.name] = _coerce(field, key, raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def merged(self, **overrides):
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _coerce(field, key, raw):
    if field.name in ("corpus", "format"):
        return raw
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
