"""
Exception hierarchy for the POISE simulator.

Every failure raised by the library derives from PoiseError so callers can
catch the whole family at once, while each class also inherits the builtin
exception it most resembles.
"""

from typing import Iterable, Optional


class PoiseError(Exception):
    """Base class for all library errors."""


class BoundsViolationError(PoiseError, ValueError):
    """A point lies outside its [lb, ub] box."""


class RoutineValidationError(PoiseError, ValueError):
    """A routine definition is malformed."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class EmptyRegionError(PoiseError, ValueError):
    """A spectral region selects no points."""


class UnknownCostError(PoiseError, LookupError):
    """No cost function is registered under the requested name."""

    def __init__(self, name: str, available: Iterable[str]):
        self.name = name
        self.available = sorted(available)
        super().__init__(
            f"unknown cost function '{name}'; available: {', '.join(self.available)}"
        )


class CostRegistrationError(PoiseError, ValueError):
    """A cost function name is already taken."""


class MissingContextError(PoiseError, ValueError):
    """A cost function was called without an input it needs."""


class DegenerateNormalizationError(PoiseError, ArithmeticError):
    """A spectrum with zero norm cannot be normalized."""


class DegenerateReferenceError(PoiseError, ArithmeticError):
    """A reference spectrum sums to zero."""


class TruncatedFidError(PoiseError, ValueError):
    """An EPSI FID is shorter than its acquisition geometry requires."""


class InsufficientSignalError(PoiseError, ValueError):
    """Too few rows of an EPSI matrix survive thresholding."""


class UnknownBackendError(PoiseError, LookupError):
    """A backend, experiment or acquisition parameter cannot be resolved."""


class SimConfigError(PoiseError, ValueError):
    """A simulator configuration is invalid."""


class InsufficientDiffusionWeightingError(PoiseError, RuntimeError):
    """No diffusion delay up to the cap attenuates the probe enough."""


class LogParseError(PoiseError, ValueError):
    """A log file line does not match the log format."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class FixtureFormatError(PoiseError, ValueError):
    """A spectrum or FID fixture file is malformed."""
