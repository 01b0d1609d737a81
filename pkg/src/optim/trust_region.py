"""
Trust-region search driven by a separable quadratic interpolation model.

Each iteration samples two points per coordinate around the iterate
(central differences when both fit inside the cube, one-sided otherwise),
fits a gradient and a diagonal curvature, and takes the Cauchy step of that
model inside box ∩ trust region. Unlike the simplex methods, the actual
cost values enter the acceptance ratio.
"""

from typing import Optional, Tuple

import numpy as np

from utils.logging_setup import get_logger

from .base import Optimizer
from .problem import OptResult, ScaledProblem

logger = get_logger(__name__)

_EDGE = 1e-12


class TrustRegionInterp(Optimizer):
    """Derivative-free trust-region method on the unit cube."""

    name = "tr"

    INITIAL_RADIUS = 0.1
    MAX_RADIUS = 0.5
    ACCEPT_RATIO = 0.1
    STRONG_RATIO = 0.75

    def _search(self) -> None:
        min_tol = float(np.min(self.problem.scaled_tol))
        x = self.problem.scaled_init.copy()
        fx = self.evaluate(x)
        # coarse tolerances still get at least one model step
        radius = max(self.INITIAL_RADIUS, min_tol)

        iteration = 0
        while radius >= min_tol:
            iteration += 1
            gradient, curvature = self._fit_model(x, fx, radius)
            step = self._cauchy_step(x, gradient, curvature, radius)
            predicted = -(gradient @ step + 0.5 * np.sum(curvature * step**2))

            if not np.any(step) or predicted <= 0.0:
                radius *= 0.5
                logger.debug("tr iteration %d: no model decrease, radius %.3g",
                             iteration, radius)
                continue

            trial = np.clip(x + step, 0.0, 1.0)
            f_trial = self.evaluate(trial)
            ratio = (fx - f_trial) / predicted
            step_length = float(np.max(np.abs(step)))

            if ratio >= self.ACCEPT_RATIO:
                x, fx = trial, f_trial
                if ratio >= self.STRONG_RATIO and step_length >= 0.99 * radius:
                    radius = min(2.0 * radius, self.MAX_RADIUS)
                else:
                    radius = min(radius, 2.0 * step_length)
                outcome = "accepted"
            else:
                radius *= 0.5
                outcome = "rejected"

            logger.debug(
                "tr iteration %d: step %s (ratio %.3g), radius %.3g, cost %.6g",
                iteration,
                outcome,
                ratio,
                radius,
                fx,
            )

    def _fit_model(
        self, x: np.ndarray, fx: float, spacing: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        """Fit per-coordinate slope and curvature from two extra samples each."""
        n = len(x)
        gradient = np.zeros(n)
        curvature = np.zeros(n)
        for i in range(n):
            t1, t2 = self._offsets(x[i], spacing)
            f1 = self.evaluate(self._shifted(x, i, t1))
            f2 = self.evaluate(self._shifted(x, i, t2))
            det = t1 * t2 * (t2 - t1) / 2.0
            gradient[i] = ((f1 - fx) * t2**2 - (f2 - fx) * t1**2) / (2.0 * det)
            curvature[i] = (t1 * (f2 - fx) - t2 * (f1 - fx)) / det
        return gradient, curvature

    @staticmethod
    def _offsets(xi: float, spacing: float) -> Tuple[float, float]:
        below = min(spacing, xi)
        above = min(spacing, 1.0 - xi)
        if below > _EDGE and above > _EDGE:
            return -below, above
        if above > _EDGE:
            return 0.5 * above, above
        return -0.5 * below, -below

    @staticmethod
    def _shifted(x: np.ndarray, i: int, t: float) -> np.ndarray:
        y = x.copy()
        y[i] += t
        return y

    @staticmethod
    def _cauchy_step(
        x: np.ndarray, gradient: np.ndarray, curvature: np.ndarray, radius: float
    ) -> np.ndarray:
        """Minimize the model along the projected steepest-descent direction."""
        lower = np.maximum(-radius, -x)
        upper = np.minimum(radius, 1.0 - x)
        direction = -gradient.copy()
        direction[(direction < 0) & (lower >= -_EDGE)] = 0.0
        direction[(direction > 0) & (upper <= _EDGE)] = 0.0
        if not np.any(direction):
            return np.zeros_like(x)

        limits = []
        for d, lo, hi in zip(direction, lower, upper):
            if d > 0:
                limits.append(hi / d)
            elif d < 0:
                limits.append(lo / d)
        t_max = min(limits)

        kappa = float(np.sum(curvature * direction**2))
        slope = float(direction @ direction)
        t = min(slope / kappa, t_max) if kappa > 0 else t_max
        return t * direction


def trust_region_interp(
    problem: ScaledProblem, max_fev: Optional[int] = None
) -> OptResult:
    """Minimize a problem with the trust-region interpolation method."""
    return TrustRegionInterp(problem, max_fev).optimize()
