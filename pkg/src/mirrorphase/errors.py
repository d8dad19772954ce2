"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """A parameter or argument lies outside its physical domain."""


class DegenerateStateError(DomainError):
    """Bloch angle at a pole: the instantaneous eigenbasis is undefined there."""


class NoDecoherenceError(DomainError):
    """A decoherence time was requested for a system that never decoheres."""


class QuadratureError(RuntimeError):
    """Numerical integration did not reach the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    still inspect the partial result.
    """

    def __init__(self, message: str, best_estimate: float | None = None,
                 error_estimate: float | None = None) -> None:
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class ConfigError(ValueError):
    """A sweep configuration file could not be parsed or validated."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SweepError(RuntimeError):
    """A sweep aborted because one grid point could not be evaluated."""

    def __init__(self, message: str, coordinates: dict[str, float] | None = None) -> None:
        super().__init__(message)
        self.coordinates = dict(coordinates or {})
