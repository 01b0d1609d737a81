"""
DOSY parameter search on top of the run loop.

Sequential: step the diffusion delay until a single probe at g_probe shows
sufficient attenuation (one-evaluation runs of the dosy_aux routine), then
optimize the gradient amplitude with the dosy routine at that delay.

Simultaneous: optimize gradient amplitude and delay together with dosy_2p,
re-acquiring the reference spectrum at every evaluation.
"""

from typing import List, Optional, Tuple

from costs import DOSY_TARGET_RATIO
from harness import PoiseRun, RunConfig
from optim import Algorithm, OptResult
from simnmr import ReferencePolicy, SimConfig, create_default_sim_config
from utils.errors import InsufficientDiffusionWeightingError
from utils.logging_setup import get_logger

from .plan import DosyPlan

logger = get_logger(__name__)


class _DosyDriver:
    """Shared run settings for the DOSY drivers."""

    def __init__(
        self,
        sim: Optional[SimConfig] = None,
        algorithm: Algorithm = Algorithm.TRUST_REGION,
        max_fev: Optional[int] = None,
        seed: Optional[int] = None,
        routines_dir: Optional[str] = None,
        out_dir: Optional[str] = None,
        started: Optional[str] = None,
    ):
        self.sim = sim
        self.algorithm = algorithm
        self.max_fev = max_fev
        self.seed = seed
        self.routines_dir = routines_dir
        self.out_dir = out_dir
        self.started = started
        self.acquisitions = 0
        self.stages = 0

    def stage_seed(self) -> int:
        """Noise seed for the next stage: the base seed plus the stage count."""
        if self.seed is not None:
            base = self.seed
        else:
            base = (self.sim or create_default_sim_config()).rng_seed
        return base + self.stages

    def _run(self, routine: str, log_name: str, **overrides) -> PoiseRun:
        settings = dict(
            routine=routine,
            algorithm=self.algorithm,
            max_fev=self.max_fev,
            seed=self.stage_seed(),
            sim=self.sim,
            out_dir=self.out_dir,
            log_name=log_name,
            routines_dir=self.routines_dir,
            started=self.started,
        )
        settings.update(overrides)
        poise_run = PoiseRun(RunConfig(**settings))
        poise_run.execute()
        self.stages += 1
        self.acquisitions += poise_run.backend.acquisitions
        return poise_run


class SequentialDosyDriver(_DosyDriver):
    """Two-phase search; ``probes`` records (delay, f_att) for each phase-1 step."""

    def __init__(self, plan: Optional[DosyPlan] = None, **settings):
        super().__init__(**settings)
        self.plan = plan or DosyPlan()
        self.probes: List[Tuple[float, float]] = []

    def probe(self, delta: float) -> float:
        """f_att at g_probe for one diffusion delay (a one-evaluation run)."""
        poise_run = self._run(
            "dosy_aux",
            f"dosy_aux_{len(self.probes) + 1}.log",
            algorithm=Algorithm.NELDER_MEAD,
            max_fev=1,
            init=[self.plan.g_probe],
            fixed={"d20": delta},
            reference_gradient=self.plan.g_ref,
        )
        f_att = poise_run.result.f_best
        self.probes.append((delta, f_att))
        logger.info("probe at d20 = %.3f s: ratio %.4f", delta, f_att + DOSY_TARGET_RATIO)
        return f_att

    def find_delta(self) -> float:
        """
        Phase 1: the shortest delay giving sufficient attenuation.

        Raises:
            InsufficientDiffusionWeightingError: if delta_max is passed first
        """
        self.probes = []
        for delta in self.plan.delta_sequence():
            if self.probe(delta) + DOSY_TARGET_RATIO <= self.plan.target_ratio:
                return delta
        raise InsufficientDiffusionWeightingError(
            f"no diffusion delay up to {self.plan.delta_max} s attenuates the signal "
            f"at {self.plan.g_probe}% by {self.plan.target_attenuation:.0%}"
        )

    def run(self) -> Tuple[float, float, OptResult]:
        """Both phases; returns (delay, gradient amplitude, phase-2 result)."""
        delta = self.find_delta()
        poise_run = self._run("dosy", "dosy.log", fixed={"d20": delta},
                              reference_gradient=self.plan.g_ref)
        result = poise_run.result
        logger.info("DOSY settled at d20 = %.3f s, gpz1 = %.2f%%", delta, result.x_best[0])
        return delta, float(result.x_best[0]), result


class SimultaneousDosyDriver(_DosyDriver):
    """Joint (gradient, delay) optimization with the dosy_2p routine."""

    def run(self) -> OptResult:
        poise_run = self._run("dosy_2p", "dosy_2p.log",
                              reference_policy=ReferencePolicy.PER_EVALUATION)
        return poise_run.result


def dosy_sequential(plan: Optional[DosyPlan] = None, sim: Optional[SimConfig] = None,
                    algorithm: Algorithm = Algorithm.TRUST_REGION,
                    **settings) -> Tuple[float, float, OptResult]:
    """Sequential DOSY search; see SequentialDosyDriver."""
    return SequentialDosyDriver(plan, sim=sim, algorithm=algorithm, **settings).run()


def dosy_simultaneous(sim: Optional[SimConfig] = None,
                      algorithm: Algorithm = Algorithm.TRUST_REGION,
                      **settings) -> OptResult:
    """Simultaneous DOSY search; see SimultaneousDosyDriver."""
    return SimultaneousDosyDriver(sim=sim, algorithm=algorithm, **settings).run()
