"""Routine files on disk: <routines_dir>/<name>.json."""

import os
from typing import List, Optional, Tuple

from utils.errors import PoiseError, RoutineValidationError

from .routine import Routine, parse_routine, write_routine

DEFAULT_ROUTINES_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    "routines",
)


def routine_path(name: str, routines_dir: Optional[str] = None) -> str:
    return os.path.join(routines_dir or DEFAULT_ROUTINES_DIR, f"{name}.json")


def load_routine(name: str, routines_dir: Optional[str] = None) -> Routine:
    """
    Load and validate a stored routine.

    Raises:
        FileNotFoundError: if no file exists for the name
        RoutineValidationError: if the file is invalid or its name field
            differs from the filename stem
    """
    path = routine_path(name, routines_dir)
    if not os.path.exists(path):
        raise FileNotFoundError(f"Routine file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        routine = parse_routine(f.read())
    if routine.name != name:
        raise RoutineValidationError(
            f"name: '{routine.name}' does not match file stem '{name}'", "name"
        )
    return routine


def save_routine(r: Routine, routines_dir: Optional[str] = None) -> str:
    """Write a routine to <routines_dir>/<name>.json and return the path."""
    path = routine_path(r.name, routines_dir)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_routine(r))
    return path


def list_routines(routines_dir: Optional[str] = None) -> List[str]:
    """Names of all stored routines, sorted."""
    directory = routines_dir or DEFAULT_ROUTINES_DIR
    if not os.path.isdir(directory):
        return []
    return sorted(
        entry[:-5] for entry in os.listdir(directory) if entry.endswith(".json")
    )


def validate_routines(routines_dir: Optional[str] = None) -> List[Tuple[str, bool, str]]:
    """Load every stored routine; report (name, ok, message) for each."""
    report = []
    for name in list_routines(routines_dir):
        try:
            routine = load_routine(name, routines_dir)
            report.append((name, True, f"{routine.dim} parameter(s), cf={routine.cf}"))
        except PoiseError as e:
            report.append((name, False, str(e)))
    return report
