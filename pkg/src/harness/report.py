"""Machine-readable result files for external plotting."""

import json
import os
from typing import List, Optional

import numpy as np

from optim import Algorithm, OptResult
from routines import Routine, load_routine

from .config import RunConfig
from .runner import resolve_sim_config

REPORT_VERSION = "1.0.0"


def report(result: OptResult, cfg: RunConfig, routine: Optional[Routine] = None,
           out_dir: Optional[str] = None) -> List[str]:
    """
    Write the summary, trajectory and (for grid runs) sweep files.

    Args:
        result: Finished optimization
        cfg: Run settings the result came from
        routine: Routine optimized; loaded from cfg when omitted
        out_dir: Target directory, created on demand; defaults to cfg.out_dir

    Returns:
        Paths written
    """
    routine = routine or load_routine(cfg.routine, cfg.routines_dir)
    out_dir = out_dir or cfg.out_dir or "output"
    os.makedirs(out_dir, exist_ok=True)
    stem = os.path.join(out_dir, routine.name)
    paths = []

    summary = {
        "metadata": {
            "generator": "poise-sim",
            "version": REPORT_VERSION,
            "description": "POISE optimization summary",
            "started": cfg.started,
        },
        "routine": routine.to_dict(),
        "algorithm": cfg.algorithm.value,
        "region": str(cfg.region),
        "seed": resolve_sim_config(cfg).rng_seed,
        "result": {
            "x_best": {p: float(v) for p, v in zip(routine.pars, result.x_best)},
            "f_best": float(result.f_best),
            "nfev": result.nfev,
            "termination": result.termination.value,
        },
    }
    summary_path = stem + ".summary.json"
    with open(summary_path, "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2)
    paths.append(summary_path)

    header = ",".join(["index", *routine.pars, "cost"])
    table = trajectory_table(result, routine.dim)
    trajectory_path = stem + ".trajectory.csv"
    np.savetxt(trajectory_path, table, delimiter=",", fmt="%.17g", header=header,
               comments="")
    paths.append(trajectory_path)

    if cfg.algorithm is Algorithm.GRID:
        # lexicographic in the parameters, first parameter slowest
        order = np.lexsort(table[:, routine.dim:0:-1].T) if len(table) else []
        sweep_path = stem + ".sweep.csv"
        np.savetxt(sweep_path, table[order][:, 1:], delimiter=",", fmt="%.17g",
                   header=",".join([*routine.pars, "cost"]), comments="")
        paths.append(sweep_path)

    return paths


def trajectory_table(result: OptResult, dim: int) -> np.ndarray:
    """Rows of (index, parameters..., cost), index from 1."""
    if not result.trajectory:
        return np.empty((0, dim + 2))
    return np.array([[i, *x, f] for i, (x, f) in enumerate(result.trajectory, start=1)],
                    dtype=float)
