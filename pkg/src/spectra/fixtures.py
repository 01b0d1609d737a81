"""
Columnar text fixtures for spectra.

First line: "sw_hz offset_hz sfo_mhz npoints"; then one "real imag" pair
per point at full precision.
"""

import os

import numpy as np

from utils.errors import FixtureFormatError

from .spectrum import Spectrum1D


def write_spectrum_fixture(s: Spectrum1D, path: str) -> None:
    """Write a spectrum fixture, creating the parent directory if needed."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    header = (f"{s.spectral_width!r} {s.transmitter_offset!r} "
              f"{s.spectrometer_freq!r} {s.n_points}")
    np.savetxt(path, np.column_stack([s.real, s.imag]), fmt="%.17g",
               header=header, comments="")


def read_spectrum_fixture(path: str) -> Spectrum1D:
    """Read a spectrum fixture written by write_spectrum_fixture()."""
    if not os.path.exists(path):
        raise FileNotFoundError(f"Spectrum fixture not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        fields = f.readline().split()
    if len(fields) != 4:
        raise FixtureFormatError(f"{path}: header needs sw, offset, sfo and npoints")
    try:
        sw, offset, sfo = (float(v) for v in fields[:3])
        npoints = int(fields[3])
    except ValueError as e:
        raise FixtureFormatError(f"{path}: bad header: {e}")

    data = np.loadtxt(path, skiprows=1, ndmin=2)
    if data.shape != (npoints, 2):
        raise FixtureFormatError(
            f"{path}: expected {npoints} 'real imag' rows, found {data.shape[0]}"
        )
    return Spectrum1D(data[:, 0], data[:, 1], sw, offset, sfo)
