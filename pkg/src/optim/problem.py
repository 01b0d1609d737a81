"""
Problem and result types shared by every optimizer.

A ScaledProblem holds a box-constrained objective in native units; the
algorithms themselves work on the unit hypercube obtained with scale().
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.errors import BoundsViolationError

ObjectiveResult = Union[float, Tuple[float, bool]]
Objective = Callable[[np.ndarray], ObjectiveResult]


class Termination(str, Enum):
    """Why an optimization stopped."""

    TOLERANCE_REACHED = "tolerance_reached"
    MAX_FEV = "max_fev"
    ABORTED = "aborted"


def scale(x: Sequence[float], lb: Sequence[float], ub: Sequence[float]) -> np.ndarray:
    """
    Map a native-unit point onto [0, 1]^n.

    Args:
        x: Point in native units
        lb: Lower bounds
        ub: Upper bounds

    Returns:
        (x - lb) / (ub - lb), coordinate-wise

    Raises:
        BoundsViolationError: if any coordinate lies outside its bounds
    """
    x = np.asarray(x, dtype=float)
    lb = np.asarray(lb, dtype=float)
    ub = np.asarray(ub, dtype=float)
    outside = (x < lb) | (x > ub)
    if np.any(outside):
        index = int(np.flatnonzero(outside)[0])
        raise BoundsViolationError(
            f"coordinate {index} = {x[index]!r} outside [{lb[index]!r}, {ub[index]!r}]"
        )
    return (x - lb) / (ub - lb)


def unscale(y: Sequence[float], lb: Sequence[float], ub: Sequence[float]) -> np.ndarray:
    """Inverse of scale(): map a unit-cube point back to native units."""
    y = np.asarray(y, dtype=float)
    lb = np.asarray(lb, dtype=float)
    ub = np.asarray(ub, dtype=float)
    return lb + y * (ub - lb)


@dataclass
class ScaledProblem:
    """Bound-constrained objective with per-coordinate tolerances."""

    lb: np.ndarray
    ub: np.ndarray
    init: np.ndarray
    tol: np.ndarray
    objective: Objective

    def __post_init__(self):
        self.lb = np.atleast_1d(np.asarray(self.lb, dtype=float))
        self.ub = np.atleast_1d(np.asarray(self.ub, dtype=float))
        self.init = np.atleast_1d(np.asarray(self.init, dtype=float))
        self.tol = np.atleast_1d(np.asarray(self.tol, dtype=float))

        lengths = {len(self.lb), len(self.ub), len(self.init), len(self.tol)}
        if len(lengths) != 1 or len(self.lb) == 0:
            raise ValueError("lb, ub, init and tol must have equal nonzero length")
        if np.any(self.lb >= self.ub):
            raise BoundsViolationError("lower bound must be below upper bound")
        if np.any(self.init < self.lb) or np.any(self.init > self.ub):
            raise BoundsViolationError("initial point outside bounds")
        if np.any(self.tol <= 0) or np.any(self.tol >= self.ub - self.lb):
            raise ValueError("tolerances must lie in (0, ub - lb)")

    @property
    def dim(self) -> int:
        """Number of parameters."""
        return len(self.lb)

    @property
    def scaled_init(self) -> np.ndarray:
        return scale(self.init, self.lb, self.ub)

    @property
    def scaled_tol(self) -> np.ndarray:
        """Per-coordinate termination thresholds on the unit cube."""
        return self.tol / (self.ub - self.lb)


@dataclass
class OptResult:
    """Outcome of one optimization run."""

    x_best: np.ndarray
    f_best: float
    nfev: int
    trajectory: List[Tuple[np.ndarray, float]] = field(default_factory=list)
    termination: Termination = Termination.TOLERANCE_REACHED

    @classmethod
    def from_trajectory(
        cls,
        trajectory: List[Tuple[np.ndarray, float]],
        termination: Termination,
        fallback_x: Optional[np.ndarray] = None,
    ) -> "OptResult":
        """Build a result whose best point is the first trajectory minimum."""
        if not trajectory:
            x0 = np.array([]) if fallback_x is None else np.array(fallback_x, float)
            return cls(x0, float("inf"), 0, [], termination)

        costs = [f for _, f in trajectory]
        best = int(np.argmin(costs))
        return cls(
            x_best=trajectory[best][0].copy(),
            f_best=float(costs[best]),
            nfev=len(trajectory),
            trajectory=list(trajectory),
            termination=termination,
        )

    def running_best(self) -> List[float]:
        """Prefix minima of the trajectory costs."""
        return list(np.minimum.accumulate([f for _, f in self.trajectory]))
