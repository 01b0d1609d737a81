"""Torczon's multidirectional search: the whole simplex pivots on its best vertex."""

from typing import Optional

import numpy as np

from utils.logging_setup import get_logger

from .base import Optimizer, initial_simplex, simplex_converged
from .problem import OptResult, ScaledProblem

logger = get_logger(__name__)


class MultiDirectionalSearch(Optimizer):
    """Reflect, expand or contract every non-best vertex through the best one."""

    name = "mds"

    EXPANSION = 2.0
    CONTRACTION = 0.5

    def _search(self) -> None:
        tol = self.problem.scaled_tol
        simplex = np.clip(initial_simplex(self.problem.scaled_init, tol), 0.0, 1.0)
        fvals = np.array([self.evaluate(v) for v in simplex])
        simplex, fvals = self._best_first(simplex, fvals)

        iteration = 0
        while not simplex_converged(simplex, tol):
            iteration += 1
            pivot, others = simplex[0], simplex[1:]

            reflected = np.clip(2.0 * pivot - others, 0.0, 1.0)
            f_reflected = np.array([self.evaluate(v) for v in reflected])

            if np.min(f_reflected) < fvals[0]:
                expanded = np.clip(
                    pivot + self.EXPANSION * (pivot - others), 0.0, 1.0
                )
                f_expanded = np.array([self.evaluate(v) for v in expanded])
                if np.min(f_expanded) < np.min(f_reflected):
                    others, f_others, step = expanded, f_expanded, "expand"
                else:
                    others, f_others, step = reflected, f_reflected, "reflect"
            else:
                others = np.clip(
                    pivot + self.CONTRACTION * (others - pivot), 0.0, 1.0
                )
                f_others = np.array([self.evaluate(v) for v in others])
                step = "contract"

            simplex = np.vstack([pivot, others])
            fvals = np.concatenate([[fvals[0]], f_others])
            simplex, fvals = self._best_first(simplex, fvals)

            logger.debug(
                "mds iteration %d: %s, best %.6g (%d evaluations)",
                iteration,
                step,
                float(fvals[0]),
                self.nfev,
            )

    @staticmethod
    def _best_first(simplex: np.ndarray, fvals: np.ndarray):
        best = int(np.argmin(fvals))
        if best == 0:
            return simplex, fvals
        order = [best] + [i for i in range(len(fvals)) if i != best]
        return simplex[order], fvals[order]


def multidimensional_search(
    problem: ScaledProblem, max_fev: Optional[int] = None
) -> OptResult:
    """Minimize a problem with multidirectional search."""
    return MultiDirectionalSearch(problem, max_fev).optimize()
