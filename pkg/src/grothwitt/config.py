"""Run-time settings: flags override GROTHWITT_* environment variables, which override defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV = {
    "precision": "GROTHWITT_TRUNC",
    "seed": "GROTHWITT_SEED",
    "budget": "GROTHWITT_BUDGET",
}


@dataclass(frozen=True)
class Config:
    precision: int = 64
    budget: int = 10**6
    trials: int = 100
    seed: int = 0
    horizon: int = 50
    m_max: int = 120
    bits: int = 128

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            # the seed only needs to be an integer
            if f.name != "seed" and v < 1:
                raise ValueError(f"{f.name} must be positive, got {v}")

    @classmethod
    def from_env(cls, environ=None) -> "Config":
        environ = os.environ if environ is None else environ
        values = {}
        for name, var in ENV.items():
            if environ.get(var, "").strip():
                values[name] = int(environ[var])
        return cls(**values)

    def override(self, **flags) -> "Config":
        return replace(self, **{k: v for k, v in flags.items() if v is not None})

    @staticmethod
    def is_set(name: str, environ=None) -> bool:
        """True if the value came from the environment rather than the default."""
        environ = os.environ if environ is None else environ
        var = ENV.get(name)
        return bool(var and environ.get(var, "").strip())
