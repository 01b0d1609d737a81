"""Exhaustive grid search, the reference baseline for the iterative methods."""

import itertools
from typing import Optional, Sequence

import numpy as np

from .base import Optimizer
from .problem import OptResult, ScaledProblem


class GridSearch(Optimizer):
    """Evaluate every node of a Cartesian grid spanning the box."""

    name = "grid"

    def __init__(
        self,
        problem: ScaledProblem,
        steps: Sequence[int],
        max_fev: Optional[int] = None,
    ):
        steps = [int(s) for s in steps]
        if len(steps) != problem.dim:
            raise ValueError(f"need {problem.dim} step counts, got {len(steps)}")
        if any(s < 2 for s in steps):
            raise ValueError("every grid axis needs at least 2 steps")
        super().__init__(problem, max_fev if max_fev is not None else int(np.prod(steps)))
        self.steps = steps

    def _search(self) -> None:
        axes = [np.linspace(0.0, 1.0, s) for s in self.steps]
        for node in itertools.product(*axes):
            self.evaluate(np.array(node))


def grid_search(
    problem: ScaledProblem, steps: Sequence[int], max_fev: Optional[int] = None
) -> OptResult:
    """Evaluate the full grid from lb to ub inclusive and return its argmin."""
    return GridSearch(problem, steps, max_fev).optimize()


def default_grid_steps(
    lb: Sequence[float], ub: Sequence[float], tol: Sequence[float]
) -> list:
    """Node count per axis with a spacing of twice the tolerance."""
    span = np.asarray(ub, dtype=float) - np.asarray(lb, dtype=float)
    counts = np.floor(span / (2.0 * np.asarray(tol, dtype=float)) + 1e-9) + 1
    return [max(2, int(c)) for c in counts]
