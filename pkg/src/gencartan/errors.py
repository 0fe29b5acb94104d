from __future__ import annotations

from dataclasses import dataclass


class ConfigError(ValueError):
    """Malformed construction data (wrong dimensions, non-skew form, ...)."""


@dataclass(frozen=True)
class Violation:
    """A failed construction condition; ``condition`` is its label, e.g. ``"(2.6)"``."""

    condition: str
    detail: str

    def __str__(self) -> str:
        return f"{self.condition}: {self.detail}"
