"""
Evaluation core shared by the optimizers.

Algorithms propose points on the unit cube; the core clips them to the box,
reuses values for points already evaluated, converts to native units, calls
the objective and records the trajectory. Running out of evaluations or an
abort from the objective unwinds the search through a private exception.
"""

from typing import List, Optional, Tuple

import numpy as np

from utils.logging_setup import get_logger

from .problem import OptResult, ScaledProblem, Termination, unscale

logger = get_logger(__name__)

REVISIT_ATOL = 1e-12


def default_max_fev(dim: int) -> int:
    """Default evaluation budget for a problem of the given dimension."""
    return 50 * dim


class _StopSearch(Exception):
    def __init__(self, termination: Termination):
        super().__init__(termination.value)
        self.termination = termination


class Optimizer:
    """Base class: subclasses implement _search() using evaluate()."""

    name = "base"

    def __init__(self, problem: ScaledProblem, max_fev: Optional[int] = None):
        if max_fev is not None and max_fev < 1:
            raise ValueError("max_fev must be at least 1")
        self.problem = problem
        self.max_fev = max_fev if max_fev is not None else default_max_fev(problem.dim)
        self.trajectory: List[Tuple[np.ndarray, float]] = []
        self._visited: List[Tuple[np.ndarray, float]] = []

    @property
    def nfev(self) -> int:
        return len(self.trajectory)

    def evaluate(self, y: np.ndarray) -> float:
        """
        Evaluate the objective at a unit-cube point.

        Args:
            y: Proposed point; clipped to [0, 1]^n before use

        Returns:
            Cost at the (clipped) point
        """
        y = np.clip(np.asarray(y, dtype=float), 0.0, 1.0)
        for seen, value in self._visited:
            if np.max(np.abs(seen - y)) <= REVISIT_ATOL:
                return value

        if self.nfev >= self.max_fev:
            raise _StopSearch(Termination.MAX_FEV)

        x = np.clip(unscale(y, self.problem.lb, self.problem.ub),
                    self.problem.lb, self.problem.ub)
        outcome = self.problem.objective(x.copy())
        if isinstance(outcome, tuple):
            value, aborted = float(outcome[0]), bool(outcome[1])
        else:
            value, aborted = float(outcome), False
        if aborted:
            raise _StopSearch(Termination.ABORTED)

        self.trajectory.append((x, value))
        self._visited.append((y, value))
        return value

    def optimize(self) -> OptResult:
        """Run the search from the problem's initial point."""
        self.trajectory = []
        self._visited = []
        try:
            self._search()
            termination = Termination.TOLERANCE_REACHED
        except _StopSearch as stop:
            termination = stop.termination

        result = OptResult.from_trajectory(
            self.trajectory, termination, self.problem.init
        )
        logger.info(
            "%s finished: %s after %d evaluations, best cost %.6g",
            self.name,
            termination.value,
            result.nfev,
            result.f_best,
        )
        return result

    def _search(self) -> None:
        raise NotImplementedError


def initial_simplex(init: np.ndarray, tol: np.ndarray) -> np.ndarray:
    """
    Build the starting simplex on the unit cube.

    Vertex i+1 offsets coordinate i of the initial point by
    max(0.1, 10 * tol[i]), stepping inward instead when that would leave
    the cube. Offsets wider than either side go to the farther face.
    """
    n = len(init)
    vertices = np.tile(np.asarray(init, dtype=float), (n + 1, 1))
    for i in range(n):
        offset = max(0.1, 10.0 * tol[i])
        if init[i] + offset <= 1.0:
            vertices[i + 1, i] = init[i] + offset
        elif init[i] - offset >= 0.0:
            vertices[i + 1, i] = init[i] - offset
        else:
            vertices[i + 1, i] = 1.0 if init[i] < 0.5 else 0.0
    return vertices


def simplex_converged(vertices: np.ndarray, tol: np.ndarray) -> bool:
    """True when every vertex pair is closer than tol in every coordinate."""
    return bool(np.all(np.ptp(vertices, axis=0) < tol))
