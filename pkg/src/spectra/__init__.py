"""Spectrum data model, region windowing and intensity sums."""

from .spectrum import (
    Region,
    Spectrum1D,
    select_region,
    sum_real,
    sum_abs_real,
    sum_sq_real,
    sum_magnitude,
)

from .fixtures import read_spectrum_fixture, write_spectrum_fixture

__all__ = [
    "Region",
    "Spectrum1D",
    "select_region",
    "sum_real",
    "sum_abs_real",
    "sum_sq_real",
    "sum_magnitude",
    "read_spectrum_fixture",
    "write_spectrum_fixture",
]
