"""Shared utilities: the error hierarchy and logging setup."""

from .errors import (
    PoiseError,
    BoundsViolationError,
    RoutineValidationError,
    EmptyRegionError,
    UnknownCostError,
    CostRegistrationError,
    MissingContextError,
    DegenerateNormalizationError,
    DegenerateReferenceError,
    TruncatedFidError,
    InsufficientSignalError,
    UnknownBackendError,
    SimConfigError,
    InsufficientDiffusionWeightingError,
    LogParseError,
    FixtureFormatError,
)

from .logging_setup import LOGGER_NAME, get_logger, init_logging

__all__ = [
    "PoiseError",
    "BoundsViolationError",
    "RoutineValidationError",
    "EmptyRegionError",
    "UnknownCostError",
    "CostRegistrationError",
    "MissingContextError",
    "DegenerateNormalizationError",
    "DegenerateReferenceError",
    "TruncatedFidError",
    "InsufficientSignalError",
    "UnknownBackendError",
    "SimConfigError",
    "InsufficientDiffusionWeightingError",
    "LogParseError",
    "FixtureFormatError",
    "LOGGER_NAME",
    "get_logger",
    "init_logging",
]
