"""
Nelder-Mead simplex search on the unit cube.

Only the ordering of cost values steers the simplex, so the sequence of
evaluated points is unchanged by any increasing affine map of the cost.
"""

from typing import Optional

import numpy as np

from utils.logging_setup import get_logger

from .base import Optimizer, initial_simplex, simplex_converged
from .problem import OptResult, ScaledProblem

logger = get_logger(__name__)


class NelderMead(Optimizer):
    """Nelder-Mead with box clipping of trial points."""

    name = "nm"

    REFLECTION = 1.0
    EXPANSION = 2.0
    CONTRACTION = 0.5
    SHRINK = 0.5

    def _search(self) -> None:
        tol = self.problem.scaled_tol
        simplex = np.clip(initial_simplex(self.problem.scaled_init, tol), 0.0, 1.0)
        fvals = np.array([self.evaluate(v) for v in simplex])

        iteration = 0
        while not simplex_converged(simplex, tol):
            iteration += 1
            order = np.argsort(fvals, kind="stable")
            simplex, fvals = simplex[order], fvals[order]

            centroid = simplex[:-1].mean(axis=0)
            direction = centroid - simplex[-1]

            x_r = self._clip(centroid + self.REFLECTION * direction)
            f_r = self.evaluate(x_r)

            if fvals[0] <= f_r < fvals[-2]:
                simplex[-1], fvals[-1] = x_r, f_r
                step = "reflect"
            elif f_r < fvals[0]:
                x_e = self._clip(centroid + self.EXPANSION * direction)
                f_e = self.evaluate(x_e)
                if f_e < f_r:
                    simplex[-1], fvals[-1] = x_e, f_e
                    step = "expand"
                else:
                    simplex[-1], fvals[-1] = x_r, f_r
                    step = "reflect"
            elif f_r < fvals[-1]:
                x_c = self._clip(centroid + self.CONTRACTION * direction)
                f_c = self.evaluate(x_c)
                if f_c < f_r:
                    simplex[-1], fvals[-1] = x_c, f_c
                    step = "outside contraction"
                else:
                    self._shrink(simplex, fvals)
                    step = "shrink"
            else:
                x_c = self._clip(centroid - self.CONTRACTION * direction)
                f_c = self.evaluate(x_c)
                if f_c < fvals[-1]:
                    simplex[-1], fvals[-1] = x_c, f_c
                    step = "inside contraction"
                else:
                    self._shrink(simplex, fvals)
                    step = "shrink"

            logger.debug(
                "nm iteration %d: %s, best %.6g (%d evaluations)",
                iteration,
                step,
                float(np.min(fvals)),
                self.nfev,
            )

    def _shrink(self, simplex: np.ndarray, fvals: np.ndarray) -> None:
        for i in range(1, len(simplex)):
            simplex[i] = simplex[0] + self.SHRINK * (simplex[i] - simplex[0])
            fvals[i] = self.evaluate(simplex[i])

    @staticmethod
    def _clip(y: np.ndarray) -> np.ndarray:
        return np.clip(y, 0.0, 1.0)


def nelder_mead(problem: ScaledProblem, max_fev: Optional[int] = None) -> OptResult:
    """Minimize a problem with the Nelder-Mead simplex method."""
    return NelderMead(problem, max_fev).optimize()
