"""Exception types shared across the package."""

from __future__ import annotations


class InterpCatError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class PoleError(InterpCatError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class LimitExceeded(InterpCatError, ValueError):
    """A configured size limit would be exceeded."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class MismatchError(InterpCatError, ValueError):
    """Incompatible dimensions, objects or fields."""


class ParameterError(InterpCatError, ValueError):
    """The parameter t is not admissible for the requested operation."""
