"""
Validation of routine definitions.

The validator collects every problem in one pass so a hand-written routine
can be fixed in one edit, rather than stopping at the first complaint.
"""

import math
from typing import Any, Dict, List, Optional, Tuple

FIELDS = ("name", "pars", "lb", "ub", "init", "tol", "cf", "au")
VECTOR_FIELDS = ("lb", "ub", "init", "tol")
# au programmes a routine may name; empty selects dispatch by routine name
BACKEND_NAMES = ("", "poise_1d", "poise_1d_noapk", "poise_2d", "poise_psyche")


class RoutineValidator:
    """Checks a decoded routine object against the routine schema."""

    def __init__(self, data: Dict[str, Any]):
        self.data = data
        self.errors: List[Tuple[Optional[str], str]] = []
        self.warnings: List[str] = []

    def validate_all(self) -> Tuple[bool, List[Tuple[Optional[str], str]], List[str]]:
        """
        Perform complete routine validation.

        Returns:
            Tuple of (is_valid, errors as (field, message) pairs, warnings)
        """
        self.errors.clear()
        self.warnings.clear()

        if not isinstance(self.data, dict):
            self.errors.append((None, "routine must be a JSON object"))
            return False, self.errors.copy(), self.warnings.copy()

        self._validate_fields_present()
        self._validate_types()
        if not self.errors:
            self._validate_lengths()
        if not self.errors:
            self._validate_bounds()
            self._validate_tolerances()

        return len(self.errors) == 0, self.errors.copy(), self.warnings.copy()

    def _error(self, field: str, message: str) -> None:
        self.errors.append((field, f"{field}: {message}"))

    def _validate_fields_present(self):
        """Every schema field present, nothing else."""
        for field in FIELDS:
            if field not in self.data:
                self._error(field, "missing field")
        for field in self.data:
            if field not in FIELDS:
                self._error(field, "unknown field")

    def _validate_types(self):
        """Strings where strings belong, real vectors elsewhere."""
        name = self.data.get("name")
        if "name" in self.data and (not isinstance(name, str) or not name):
            self._error("name", "must be a nonempty string")

        for field in ("cf", "au"):
            if field in self.data and not isinstance(self.data[field], str):
                self._error(field, "must be a string")
        if "cf" in self.data and self.data.get("cf") == "":
            self._error("cf", "must name a cost function")
        au = self.data.get("au")
        if isinstance(au, str) and au not in BACKEND_NAMES:
            self._error("au", f"unknown backend '{au}'; available: "
                        + ", ".join(repr(name) for name in BACKEND_NAMES))

        pars = self.data.get("pars")
        if "pars" in self.data:
            if not isinstance(pars, list) or not pars:
                self._error("pars", "must be a nonempty list of parameter names")
            elif not all(isinstance(p, str) and p for p in pars):
                self._error("pars", "parameter names must be nonempty strings")
            elif len(set(pars)) != len(pars):
                self._error("pars", "parameter names must be unique")

        for field in VECTOR_FIELDS:
            if field not in self.data:
                continue
            values = self.data[field]
            if not isinstance(values, list) or not all(_is_real(v) for v in values):
                self._error(field, "must be a list of real numbers")

    def _validate_lengths(self):
        """All vectors as long as the parameter list."""
        n = len(self.data["pars"])
        for field in VECTOR_FIELDS:
            if len(self.data[field]) != n:
                self._error(
                    field, f"has {len(self.data[field])} values for {n} parameters"
                )

    def _validate_bounds(self):
        """lb < ub and lb <= init <= ub per parameter."""
        for par, lo, hi, x0 in zip(self.data["pars"], self.data["lb"],
                                   self.data["ub"], self.data["init"]):
            if lo >= hi:
                self._error("lb", f"lower bound {lo} of {par} not below upper bound {hi}")
            elif x0 < lo or x0 > hi:
                self._error("init", f"initial value {x0} of {par} outside [{lo}, {hi}]")

    def _validate_tolerances(self):
        """0 < tol < ub - lb per parameter."""
        for par, lo, hi, tol in zip(self.data["pars"], self.data["lb"],
                                    self.data["ub"], self.data["tol"]):
            if tol <= 0:
                self._error("tol", f"tolerance {tol} of {par} must be positive")
            elif lo < hi and tol >= hi - lo:
                self._error("tol", f"tolerance {tol} of {par} spans the whole range")
            elif lo < hi and tol > 0.25 * (hi - lo):
                self.warnings.append(
                    f"tolerance {tol} of {par} is over a quarter of its range"
                )


def _is_real(value: Any) -> bool:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        return False
    try:
        return math.isfinite(value)
    except OverflowError:
        # integers past the float range
        return False
