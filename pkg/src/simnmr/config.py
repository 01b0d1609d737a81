"""
Ground truth and noise settings for the simulated spectrometer.

The defaults place every model optimum where the acceptance runs expect
it: a 48.4 us 360 degree pulse, the ferulic acid T1 set, a 3.5 s NOE
mixing time, alpha = 1.0004 for EPSI, water at 1880 Hz, a 75% DOSY
gradient at a 110 ms diffusion delay, a 230 Hz ASAP-HSQC optimum and a
17 degree PSYCHE flip angle.

Config files are plain "key = value" lines; '#' starts a comment and
lists are comma-separated.
"""

import math
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, List, Tuple

from utils.errors import SimConfigError

FERULIC_T1_VALUES = [1.750, 0.977, 1.279, 1.615, 1.415, 0.949]


@dataclass
class SimConfig:
    """Complete ground-truth set for the simulated experiments."""

    # Pulse calibration (us)
    p360_true: float = 48.4

    # Relaxation: one T1 per ferulic acid peak (s), repetition time (s)
    t1_values: List[float] = field(default_factory=lambda: list(FERULIC_T1_VALUES))
    tau_r: float = 1.20

    # NOE buildup (1/s); r1 puts the optimum mixing time at 3.5 s
    noe_sigma: float = 0.5
    noe_r1: float = 0.1051612

    # EPSI gradient ratio giving balanced echoes
    alpha_true: float = 1.0004

    # Presaturation (Hz, 1/(Hz^2 s), intensity)
    water_offset_hz: float = 1880.0
    water_sat_rate: float = 8.8e-4
    water_w0: float = 1.0
    water_width_hz: float = 0.5
    water_ripple: float = 0.3
    water_ripple_period_hz: float = 0.8

    # Diffusion (m^2/s, rad/(s T), s, T/m at 100% gradient)
    diffusion_d: float = 1.8407e-10
    gamma: float = 2.675e8
    delta: float = 0.002
    g_max_tesla_per_m: float = 0.66

    # INEPT surrogate for ASAP-HSQC (Hz, 1/s)
    inept_j_hz: float = 145.0
    inept_r2: float = 298.8

    # PSYCHE tradeoff
    psyche_flip_opt_deg: float = 17.0
    psyche_noise_level: float = 0.1

    # Noise
    noise_sigma: float = 0.01
    rng_seed: int = 0

    @property
    def noe_optimum_s(self) -> float:
        """Mixing time maximising the NOE buildup model."""
        return math.log(1.0 + self.noe_sigma / self.noe_r1) / self.noe_sigma

    @property
    def diffusion_rate(self) -> float:
        """D gamma^2 delta^2 Gmax^2: the attenuation exponent per second of (Delta - delta/3) at 100%."""
        return (self.diffusion_d * self.gamma ** 2 * self.delta ** 2
                * self.g_max_tesla_per_m ** 2)

    def with_seed(self, seed: int) -> "SimConfig":
        return replace(self, rng_seed=int(seed))


class SimConfigValidator:
    """Validates simulator settings."""

    def __init__(self, config: SimConfig):
        self.config = config
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_all(self) -> Tuple[bool, List[str], List[str]]:
        """
        Perform complete configuration validation.

        Returns:
            Tuple of (is_valid, errors, warnings)
        """
        self.errors.clear()
        self.warnings.clear()

        self._validate_physical_constants()
        self._validate_relaxation()
        self._validate_noise()
        self._validate_psyche()

        return len(self.errors) == 0, self.errors.copy(), self.warnings.copy()

    def _validate_physical_constants(self):
        """Strictly positive model constants."""
        c = self.config
        for name in ("p360_true", "tau_r", "noe_sigma", "noe_r1", "alpha_true",
                     "water_offset_hz", "water_sat_rate", "water_w0",
                     "water_width_hz", "water_ripple_period_hz", "gamma", "delta",
                     "g_max_tesla_per_m", "inept_j_hz", "inept_r2"):
            if not getattr(c, name) > 0:
                self.errors.append(f"{name} must be positive, got {getattr(c, name)}")

        if c.diffusion_d < 0:
            self.errors.append(f"diffusion_d must not be negative, got {c.diffusion_d}")
        elif c.diffusion_d == 0:
            self.warnings.append("diffusion_d is zero: DOSY signals never attenuate")

        if c.water_ripple < 0:
            self.errors.append(f"water_ripple must not be negative, got {c.water_ripple}")

    def _validate_relaxation(self):
        """T1 list usable by the multi-peak experiments."""
        t1 = self.config.t1_values
        if not t1:
            self.errors.append("t1_values must hold at least one value")
            return
        if any(not v > 0 for v in t1):
            self.errors.append(f"t1_values must all be positive, got {t1}")
        if len(t1) not in (1, len(FERULIC_T1_VALUES)):
            self.warnings.append(
                f"{len(t1)} T1 values for {len(FERULIC_T1_VALUES)} peaks; "
                f"values are repeated to fill"
            )

    def _validate_noise(self):
        if self.config.noise_sigma < 0:
            self.errors.append(
                f"noise_sigma must not be negative, got {self.config.noise_sigma}"
            )
        elif self.config.noise_sigma > 0.1:
            self.warnings.append(
                f"noise_sigma {self.config.noise_sigma} exceeds 10% of peak height"
            )

    def _validate_psyche(self):
        if not 0 < self.config.psyche_flip_opt_deg < 90:
            self.errors.append("psyche_flip_opt_deg must lie in (0, 90)")
        if self.config.psyche_noise_level < 0:
            self.errors.append("psyche_noise_level must not be negative")


def parse_sim_config(text: str) -> SimConfig:
    """
    Parse "key = value" text into a validated SimConfig.

    Raises:
        SimConfigError: listing every unknown key, bad value and
            validation failure
    """
    types = {f.name: f.type for f in fields(SimConfig)}
    values: Dict[str, Any] = {}
    errors: List[str] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            errors.append(f"line {line_number}: expected 'key = value'")
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in types:
            errors.append(f"line {line_number}: unknown key '{key}'")
            continue
        try:
            if key == "t1_values":
                values[key] = [float(v) for v in value.split(",") if v.strip()]
            elif key == "rng_seed":
                values[key] = int(value)
            else:
                values[key] = float(value)
        except ValueError:
            errors.append(f"line {line_number}: cannot parse {key} = '{value}'")

    if errors:
        raise SimConfigError("; ".join(errors))

    config = SimConfig(**values)
    is_valid, problems, _ = SimConfigValidator(config).validate_all()
    if not is_valid:
        raise SimConfigError("; ".join(problems))
    return config


def load_sim_config(path: str) -> SimConfig:
    """Load a SimConfig file."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except FileNotFoundError:
        raise FileNotFoundError(f"Simulator configuration not found: {path}")
    return parse_sim_config(text)


def create_default_sim_config() -> SimConfig:
    """Create the default simulator configuration."""
    return SimConfig()


def create_noise_free_sim_config() -> SimConfig:
    """Create a configuration whose spectra carry no noise."""
    config = SimConfig()
    config.noise_sigma = 0.0
    return config
