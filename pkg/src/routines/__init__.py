"""Parsing, validation and storage of routine definitions."""

from .validator import BACKEND_NAMES, FIELDS, RoutineValidator
from .routine import Routine, parse_routine, write_routine
from .store import (
    DEFAULT_ROUTINES_DIR,
    routine_path,
    load_routine,
    save_routine,
    list_routines,
    validate_routines,
)

__all__ = [
    "BACKEND_NAMES",
    "FIELDS",
    "RoutineValidator",
    "Routine",
    "parse_routine",
    "write_routine",
    "DEFAULT_ROUTINES_DIR",
    "routine_path",
    "load_routine",
    "save_routine",
    "list_routines",
    "validate_routines",
]
