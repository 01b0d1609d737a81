"""
The optimization loop: propose a point, acquire, evaluate, feed back.

PoiseRun wires a routine to its cost function and simulated backend, runs
the chosen algorithm and logs every evaluation as it happens, so a run
that fails part-way leaves a readable log prefix.
"""

import math
import os
from datetime import datetime
from typing import Dict, Optional, Set, Tuple

import numpy as np

from costs import CostContext, CostFunction, load_user_costs, registry_lookup
from optim import OptResult, run_algorithm
from routines import Routine, load_routine
from simnmr import SimConfig, SimulatedSpectrometer, create_default_sim_config
from simnmr import load_sim_config
from utils.logging_setup import get_logger

from .config import RunConfig
from .log import LogWriter

logger = get_logger(__name__)

_loaded_user_costs: Set[str] = set()


def ensure_user_costs(path: Optional[str]) -> None:
    """Load a user cost file once per process."""
    if not path:
        return
    key = os.path.abspath(path)
    if key not in _loaded_user_costs:
        load_user_costs(path)
        _loaded_user_costs.add(key)


def resolve_sim_config(cfg: RunConfig) -> SimConfig:
    """In-memory config, else the config file, else defaults; then the seed override."""
    if cfg.sim is not None:
        sim = cfg.sim
    elif cfg.sim_config:
        sim = load_sim_config(cfg.sim_config)
    else:
        sim = create_default_sim_config()
    if cfg.seed is not None:
        sim = sim.with_seed(cfg.seed)
    return sim


class PoiseRun:
    """One optimization run and everything it touched."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        ensure_user_costs(cfg.user_costs)
        self.routine: Routine = load_routine(cfg.routine, cfg.routines_dir)
        if cfg.init is not None:
            self.routine = self.routine.with_init(cfg.init)
        self.cost: CostFunction = registry_lookup(self.routine.cf)
        self.sim: SimConfig = resolve_sim_config(cfg)
        self.backend = SimulatedSpectrometer(
            self.routine.name,
            self.routine.au,
            self.sim,
            fixed=cfg.fixed,
            needs_reference="reference" in self.cost.requires,
            reference_policy=cfg.reference_policy,
            reference_gradient=cfg.reference_gradient,
        )
        self.result: Optional[OptResult] = None
        self._writer: Optional[LogWriter] = None

    @property
    def log_path(self) -> Optional[str]:
        if self.cfg.out_dir is None:
            return None
        return os.path.join(self.cfg.out_dir, self.cfg.log_name)

    def header(self) -> Dict[str, str]:
        started = self.cfg.started or datetime.now().isoformat(timespec="seconds")
        return {
            "routine": self.routine.name,
            "algorithm": self.cfg.algorithm.value,
            "backend": self.backend.name,
            "cost": self.routine.cf,
            "region": str(self.cfg.region),
            "seed": str(self.sim.rng_seed),
            "started": started,
            "pars": " ".join(self.routine.pars),
        }

    def evaluate(self, x: np.ndarray) -> float:
        """Acquire at a native-unit point and score the data."""
        acquisition = self.backend.acquire(self.routine.pars, x)
        ctx = CostContext(
            spectrum=acquisition.spectrum,
            region=self.cfg.region,
            target=acquisition.target,
            reference=acquisition.reference,
            aux=acquisition.aux,
            fid=acquisition.fid,
        )
        return float(self.cost(ctx))

    def _objective(self, x: np.ndarray) -> Tuple[float, bool]:
        try:
            cost = self.evaluate(x)
        except KeyboardInterrupt:
            logger.warning("evaluation interrupted; stopping the optimization")
            return math.nan, True
        if self._writer is not None:
            self._writer.write_row(x, cost)
        logger.debug("evaluation: %s -> %.6g",
                     " ".join(f"{p}={v:.6g}" for p, v in zip(self.routine.pars, x)),
                     cost)
        return cost, False

    def execute(self) -> OptResult:
        """Run the optimization, writing the log as it goes."""
        problem = self.routine.to_problem(self._objective)
        path = self.log_path
        if path is not None:
            self._writer = LogWriter(path)
        try:
            if self._writer is not None:
                self._writer.write_header(self.header())
            logger.info("optimizing %s (%s) with %s", self.routine.name,
                        ", ".join(self.routine.pars), self.cfg.algorithm.value)
            result = run_algorithm(self.cfg.algorithm, problem, self.cfg.max_fev,
                                   self.cfg.grid_steps)
            if self._writer is not None:
                self._writer.write_footer(result)
        finally:
            if self._writer is not None:
                self._writer.close()
                self._writer = None

        self.result = result
        logger.info("best point: %s, cost %.6g after %d evaluations (%s)",
                    self.format_best(result), result.f_best, result.nfev,
                    result.termination.value)
        return result

    def format_best(self, result: OptResult) -> str:
        return ", ".join(f"{p} = {v:.6g}" for p, v in zip(self.routine.pars,
                                                          result.x_best))


def run(cfg: RunConfig) -> OptResult:
    """Load the routine, optimize it on the simulator and write the log."""
    return PoiseRun(cfg).execute()
