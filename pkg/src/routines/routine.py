"""
Routine definitions: what to optimize, within which bounds, by which cost.

Routines are stored as one JSON object per file with exactly the fields
name, pars, lb, ub, init, tol, cf and au.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from optim import Objective, ScaledProblem
from utils.errors import RoutineValidationError

from .validator import FIELDS, RoutineValidator


@dataclass(frozen=True)
class Routine:
    """An immutable optimization task."""

    name: str
    pars: Tuple[str, ...]
    lb: Tuple[float, ...]
    ub: Tuple[float, ...]
    init: Tuple[float, ...]
    tol: Tuple[float, ...]
    cf: str
    au: str = ""

    def __post_init__(self):
        for field in ("pars", "lb", "ub", "init", "tol"):
            object.__setattr__(self, field, tuple(getattr(self, field)))
        for field in ("lb", "ub", "init", "tol"):
            object.__setattr__(
                self, field, tuple(float(v) for v in getattr(self, field))
            )
        is_valid, errors, _ = RoutineValidator(self.to_dict()).validate_all()
        if not is_valid:
            field, message = errors[0]
            raise RoutineValidationError(message, field)

    @property
    def dim(self) -> int:
        return len(self.pars)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "pars": list(self.pars),
            "lb": list(self.lb),
            "ub": list(self.ub),
            "init": list(self.init),
            "tol": list(self.tol),
            "cf": self.cf,
            "au": self.au,
        }

    def to_problem(self, objective: Objective) -> ScaledProblem:
        """Wrap an objective into the problem type the optimizers accept."""
        return ScaledProblem(self.lb, self.ub, self.init, self.tol, objective)

    def with_init(self, init) -> "Routine":
        """Copy of the routine starting from another point."""
        data = self.to_dict()
        data["init"] = [float(v) for v in init]
        return Routine(**data)


def parse_routine(text: str) -> Routine:
    """
    Parse a routine from JSON text.

    Args:
        text: UTF-8 JSON object with the eight routine fields

    Returns:
        The validated Routine

    Raises:
        RoutineValidationError: naming the first offending field
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise RoutineValidationError(f"not valid JSON: {e}")

    is_valid, errors, _ = RoutineValidator(data).validate_all()
    if not is_valid:
        field, message = errors[0]
        if len(errors) > 1:
            message += f" (and {len(errors) - 1} more problem(s))"
        raise RoutineValidationError(message, field)
    return Routine(**{field: data[field] for field in FIELDS})


def write_routine(r: Routine) -> str:
    """Render a routine as JSON; reals keep full round-trip precision."""
    return json.dumps(r.to_dict(), indent=4) + "\n"
