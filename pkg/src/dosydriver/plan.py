"""Phase-1 settings for the sequential DOSY search."""

from dataclasses import dataclass
from typing import List


@dataclass
class DosyPlan:
    """Diffusion-delay stepping and the attenuation that counts as sufficient."""

    # Diffusion delay stepping (s)
    delta_init: float = 0.05
    delta_step: float = 0.02
    delta_max: float = 0.5

    # Gradient amplitudes (% of maximum)
    g_ref: float = 10.0
    g_probe: float = 80.0

    # Fraction of the reference signal that must be lost at g_probe
    target_attenuation: float = 0.75

    def __post_init__(self):
        if not 0 < self.delta_init < self.delta_max:
            raise ValueError("need 0 < delta_init < delta_max")
        if self.delta_step <= 0:
            raise ValueError("delta_step must be positive")
        if not self.g_ref < self.g_probe:
            raise ValueError("g_ref must be below g_probe")
        if not 0 < self.target_attenuation < 1:
            raise ValueError("target_attenuation must lie in (0, 1)")

    @property
    def target_ratio(self) -> float:
        """Probe-to-reference intensity ratio at sufficient attenuation."""
        return 1.0 - self.target_attenuation

    def delta_sequence(self) -> List[float]:
        """Delays tried in phase 1: delta_init, +step, ... up to delta_max."""
        deltas = []
        i = 0
        while True:
            delta = round(self.delta_init + i * self.delta_step, 12)
            if delta > self.delta_max:
                return deltas
            deltas.append(delta)
            i += 1
