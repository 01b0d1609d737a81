"""Settings for one optimization run."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from optim import Algorithm
from simnmr import REFERENCE_GRADIENT_PERCENT, ReferencePolicy, SimConfig
from spectra import Region

DEFAULT_LOG_NAME = "poise.log"


@dataclass
class RunConfig:
    """Complete description of a run; the CLI fills one from its flags."""

    # What to optimize and how
    routine: str
    algorithm: Union[Algorithm, str] = Algorithm.TRUST_REGION
    max_fev: Optional[int] = None
    grid_steps: Optional[List[int]] = None
    init: Optional[List[float]] = None  # overrides the routine's start point

    # Cost evaluation
    region: Region = field(default_factory=Region.whole)
    user_costs: Optional[str] = None

    # Simulator: seed None keeps SimConfig.rng_seed; sim overrides sim_config
    seed: Optional[int] = None
    sim_config: Optional[str] = None
    sim: Optional[SimConfig] = None
    fixed: Dict[str, float] = field(default_factory=dict)
    reference_policy: ReferencePolicy = ReferencePolicy.ON_CHANGE
    reference_gradient: float = REFERENCE_GRADIENT_PERCENT

    # Files: out_dir None writes nothing
    out_dir: Optional[str] = "output"
    log_name: str = DEFAULT_LOG_NAME
    routines_dir: Optional[str] = None
    started: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.algorithm, Algorithm):
            self.algorithm = Algorithm.parse(str(self.algorithm))
        if self.max_fev is not None and self.max_fev < 1:
            raise ValueError(f"max_fev must be at least 1, got {self.max_fev}")
        if isinstance(self.region, str):
            self.region = Region.parse(self.region)
        self.reference_policy = ReferencePolicy(self.reference_policy)
