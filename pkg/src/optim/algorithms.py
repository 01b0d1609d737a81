"""Algorithm names and dispatch."""

from enum import Enum
from typing import Optional, Sequence

from .grid import default_grid_steps, grid_search
from .mds import multidimensional_search
from .nelder_mead import nelder_mead
from .problem import OptResult, ScaledProblem
from .trust_region import trust_region_interp


class Algorithm(str, Enum):
    NELDER_MEAD = "nm"
    MDS = "mds"
    TRUST_REGION = "tr"
    GRID = "grid"

    @classmethod
    def parse(cls, name: str) -> "Algorithm":
        """Accept the short names plus 'bobyqa' as an alias for 'tr'."""
        key = name.strip().lower()
        if key == "bobyqa":
            return cls.TRUST_REGION
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(a.value for a in cls)
            raise ValueError(f"unknown algorithm '{name}' (choose from {choices})")


def run_algorithm(
    algorithm: Algorithm,
    problem: ScaledProblem,
    max_fev: Optional[int] = None,
    steps: Optional[Sequence[int]] = None,
) -> OptResult:
    """Run one of the optimizers on a problem."""
    if algorithm is Algorithm.NELDER_MEAD:
        return nelder_mead(problem, max_fev)
    if algorithm is Algorithm.MDS:
        return multidimensional_search(problem, max_fev)
    if algorithm is Algorithm.TRUST_REGION:
        return trust_region_interp(problem, max_fev)
    if steps is None:
        steps = default_grid_steps(problem.lb, problem.ub, problem.tol)
    return grid_search(problem, steps, max_fev)
