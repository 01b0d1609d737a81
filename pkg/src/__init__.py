"""
POISE Simulator

Parameter optimization for NMR experiments. Routines name the parameters
to optimize, their bounds and the cost function; an optimizer drives a
simulated spectrometer until the parameters settle within tolerance.
"""

__version__ = "1.0.0"
__author__ = "POISE developers"
__description__ = (
    "Closed-loop NMR parameter optimization against a simulated spectrometer"
)
