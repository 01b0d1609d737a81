"""Bound-constrained derivative-free optimizers and the grid-search baseline."""

from .problem import (
    Objective,
    OptResult,
    ScaledProblem,
    Termination,
    scale,
    unscale,
)

from .base import Optimizer, default_max_fev, initial_simplex, simplex_converged
from .nelder_mead import NelderMead, nelder_mead
from .mds import MultiDirectionalSearch, multidimensional_search
from .trust_region import TrustRegionInterp, trust_region_interp
from .grid import GridSearch, default_grid_steps, grid_search
from .algorithms import Algorithm, run_algorithm

__all__ = [
    "Objective",
    "OptResult",
    "ScaledProblem",
    "Termination",
    "scale",
    "unscale",
    "Optimizer",
    "default_max_fev",
    "initial_simplex",
    "simplex_converged",
    "NelderMead",
    "nelder_mead",
    "MultiDirectionalSearch",
    "multidimensional_search",
    "TrustRegionInterp",
    "trust_region_interp",
    "GridSearch",
    "default_grid_steps",
    "grid_search",
    "Algorithm",
    "run_algorithm",
]
