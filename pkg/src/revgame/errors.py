"""Exception types shared across the solver."""

from __future__ import annotations


class GameModelError(Exception):
    """Base class for every failure raised by this package."""


class InvalidParameterError(GameModelError):
    """An argument violates the documented domain of an operation."""


class FunctionPairError(GameModelError):
    """A weight/cost pair failed structural validation or is degenerate."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DegenerateMemberError(GameModelError):
    """An operation needs a nonzero directional diversity but d_m = 0."""


class NoRootError(GameModelError):
    """A monotone inversion target lies outside the attainable range."""


class ConvergenceError(GameModelError):
    """Fixed-point iteration failed to reach its residual tolerance."""

    def __init__(self, message: str, last_profile=None, residual: float | None = None):
        super().__init__(message)
        self.last_profile = last_profile
        self.residual = residual


class OracleError(GameModelError):
    """Grid-search oracle failed to settle on a fixed point."""

    def __init__(self, message: str, tail=()):
        super().__init__(message)
        self.tail = tuple(tail)


class ConfigError(GameModelError):
    """A config file could not be parsed; names the key and line."""

    def __init__(self, message: str, key: str | None = None, line_no: int | None = None):
        super().__init__(message)
        self.key = key
        self.line_no = line_no
