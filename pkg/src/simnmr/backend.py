"""
Simulated spectrometer: routine parameters in, acquired data out.

A routine's au field names the acquisition programme and its name prefix
selects the simulated experiment, so "psyche3" with au "poise_psyche"
acquires PSYCHE spectra. Parameters a routine does not optimize keep
per-experiment defaults unless overridden through ``fixed``.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from epsi import EpsiFid
from routines import BACKEND_NAMES
from spectra import Spectrum1D
from utils.errors import UnknownBackendError
from utils.logging_setup import get_logger

from . import experiments as ex
from .config import SimConfig, create_default_sim_config

logger = get_logger(__name__)

REFERENCE_GRADIENT_PERCENT = 10.0


@dataclass
class Acquisition:
    """Data from one simulated acquisition, shaped for a CostContext."""

    spectrum: Optional[Union[Spectrum1D, np.ndarray]] = None
    target: Optional[Spectrum1D] = None
    reference: Optional[Spectrum1D] = None
    fid: Optional[EpsiFid] = None
    aux: Dict[str, float] = field(default_factory=dict)


AcquireFn = Callable[[Dict[str, float], SimConfig, Optional[np.random.Generator]],
                     Acquisition]


@dataclass(frozen=True)
class Experiment:
    """A simulated experiment and the acquisition parameters it accepts."""

    name: str
    prefix: str
    defaults: Mapping[str, float]
    acquire: AcquireFn


def _pulse(p, cfg, rng):
    return Acquisition(ex.sim_pulse_acquire(p["p1"], cfg, rng))


def _ernst(p, cfg, rng):
    return Acquisition(ex.sim_ernst(p["cnst20"], cfg.tau_r, cfg.t1_values, cfg, rng))


def _noe(p, cfg, rng):
    return Acquisition(ex.sim_noe1d(p["d8"], cfg, rng),
                       aux={"excitation_offset_hz": ex.noe_excitation_offset_hz()})


def _invrec(p, cfg, rng):
    return Acquisition(ex.sim_invrec(p["d27"], cfg.t1_values, cfg, rng))


def _asap(p, cfg, rng):
    return Acquisition(ex.sim_asap_projection(p["cnst3"], cfg, rng))


def _epsi(p, cfg, rng):
    return Acquisition(fid=ex.sim_epsi_fid(p["cnst16"], cfg, rng))


def _psyche(p, cfg, rng):
    test, target = ex.sim_specdiff_pair(p, cfg)
    return Acquisition(test, target=target)


def _presat(p, cfg, rng):
    return Acquisition(ex.sim_presat(p["o1"], p["cnst20"], p["d8"], p["d1"], cfg, rng))


def _dosy(p, cfg, rng):
    return Acquisition(ex.sim_dosy(p["gpz1"], p["d20"], cfg, rng),
                       aux={"delta_s": p["d20"]})


EXPERIMENTS = (
    Experiment("pulse", "p1cal", {"p1": 12.1}, _pulse),
    Experiment("ernst", "ernst", {"cnst20": 90.0}, _ernst),
    Experiment("noe", "1dnoe", {"d8": 0.5}, _noe),
    Experiment("invrec", "invrec", {"d27": 1.0}, _invrec),
    Experiment("asap", "asaphsqc", {"cnst3": 145.0}, _asap),
    Experiment("epsi", "epsi", {"cnst16": 1.0}, _epsi),
    Experiment("psyche", "psyche", dict(ex.PSYCHE_DEFAULTS), _psyche),
    Experiment("presat", "solvsupp",
               {"o1": 1880.61, "cnst20": 50.0, "d8": 0.1, "d1": 2.0}, _presat),
    Experiment("dosy", "dosy", {"gpz1": 50.0, "d20": 0.1}, _dosy),
)


def resolve_experiment(routine_name: str, au: str = "") -> Experiment:
    """
    Pick the simulated experiment for a routine.

    Raises:
        UnknownBackendError: for an unregistered au name or a routine name
            no experiment claims
    """
    if au not in BACKEND_NAMES:
        raise UnknownBackendError(
            f"unknown backend '{au}'; available: "
            + ", ".join(repr(name) for name in BACKEND_NAMES)
        )
    for experiment in EXPERIMENTS:
        if routine_name.startswith(experiment.prefix):
            return experiment
    raise UnknownBackendError(
        f"no simulated experiment for routine '{routine_name}'; prefixes: "
        + ", ".join(e.prefix for e in EXPERIMENTS)
    )


class ReferencePolicy(str, Enum):
    """When the dosy family re-acquires its reference spectrum."""

    ON_CHANGE = "on_change"
    PER_EVALUATION = "per_evaluation"


class SimulatedSpectrometer:
    """
    Acquisition backend for one routine.

    Every acquisition, reference spectra included, is counted in
    ``acquisitions``. One generator seeded with the configuration's
    rng_seed feeds every acquisition in order, so each spectrum carries
    fresh noise and a run with a given seed is reproducible.
    """

    def __init__(
        self,
        routine_name: str,
        au: str = "",
        config: Optional[SimConfig] = None,
        fixed: Optional[Mapping[str, float]] = None,
        needs_reference: bool = False,
        reference_policy: ReferencePolicy = ReferencePolicy.ON_CHANGE,
        reference_gradient: float = REFERENCE_GRADIENT_PERCENT,
    ):
        self.experiment = resolve_experiment(routine_name, au)
        self.au = au
        self.config = config if config is not None else create_default_sim_config()
        self.fixed: Dict[str, float] = {}
        for name, value in (fixed or {}).items():
            self._check_parameter(name)
            self.fixed[name] = float(value)
        if needs_reference and self.experiment.name != "dosy":
            raise UnknownBackendError(
                f"the {self.experiment.name} experiment has no reference spectrum"
            )
        self.needs_reference = needs_reference
        self.reference_policy = ReferencePolicy(reference_policy)
        self.reference_gradient = float(reference_gradient)
        self.acquisitions = 0
        self._reference: Optional[Spectrum1D] = None
        self._reference_delta: Optional[float] = None
        self._rng: Optional[np.random.Generator] = None
        if self.config.noise_sigma > 0:
            self._rng = np.random.default_rng(self.config.rng_seed)

    @property
    def name(self) -> str:
        """Backend label for logs: au programme and simulated experiment."""
        return f"{self.au or 'default'}:{self.experiment.name}"

    def _check_parameter(self, name: str) -> None:
        if name not in self.experiment.defaults:
            raise UnknownBackendError(
                f"the {self.experiment.name} experiment has no parameter '{name}'; "
                f"available: {', '.join(sorted(self.experiment.defaults))}"
            )

    def parameters(self, names: Sequence[str], values: Sequence[float]) -> Dict[str, float]:
        """Experiment defaults, overridden by fixed values, then by the point."""
        params = dict(self.experiment.defaults)
        params.update(self.fixed)
        for name, value in zip(names, values):
            self._check_parameter(name)
            params[name] = float(value)
        return params

    def acquire(self, names: Sequence[str], values: Sequence[float]) -> Acquisition:
        """Acquire at a parameter point; attaches a reference when required."""
        params = self.parameters(names, values)
        acquisition = self.experiment.acquire(params, self.config, self._rng)
        self.acquisitions += 1
        if self.needs_reference:
            acquisition.reference = self.reference_for(params)
        return acquisition

    def reference_for(self, params: Dict[str, float]) -> Spectrum1D:
        """Reference spectrum at the reference gradient and the current delay."""
        delta = params["d20"]
        stale = (self._reference is None or delta != self._reference_delta
                 or self.reference_policy is ReferencePolicy.PER_EVALUATION)
        if stale:
            reference_params = dict(params, gpz1=self.reference_gradient)
            reference = self.experiment.acquire(reference_params, self.config,
                                                self._rng)
            self.acquisitions += 1
            self._reference = reference.spectrum
            self._reference_delta = delta
            logger.debug("acquired reference spectrum at d20 = %r s", delta)
        return self._reference

    def parameter_names(self) -> List[str]:
        return sorted(self.experiment.defaults)
