"""Sequential and simultaneous DOSY parameter searches."""

from .plan import DosyPlan
from .drivers import (
    SequentialDosyDriver,
    SimultaneousDosyDriver,
    dosy_sequential,
    dosy_simultaneous,
)

__all__ = [
    "DosyPlan",
    "SequentialDosyDriver",
    "SimultaneousDosyDriver",
    "dosy_sequential",
    "dosy_simultaneous",
]
