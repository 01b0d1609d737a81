"""
Frequency-domain spectrum model and region windowing.

Index 0 sits at the high-ppm edge of the spectrum; point i lies at
offset + sw/2 - i * sw / n_points Hz, and ppm is Hz divided by the
spectrometer frequency in MHz.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from utils.errors import EmptyRegionError


@dataclass(frozen=True)
class Region:
    """Chemical-shift window with inclusive endpoints; unbounded means whole spectrum."""

    lo_ppm: Optional[float] = None
    hi_ppm: Optional[float] = None

    def __post_init__(self):
        if (self.lo_ppm is None) != (self.hi_ppm is None):
            raise ValueError("a region needs both endpoints or neither")
        if self.lo_ppm is not None and not self.lo_ppm < self.hi_ppm:
            raise ValueError(f"region lower edge {self.lo_ppm} not below {self.hi_ppm}")

    @classmethod
    def whole(cls) -> "Region":
        return cls()

    @property
    def is_whole(self) -> bool:
        return self.lo_ppm is None

    @classmethod
    def parse(cls, text: str) -> "Region":
        """Parse 'lo,hi' in ppm, or 'whole'."""
        text = text.strip()
        if text.lower() in ("", "whole"):
            return cls.whole()
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"region must be 'lo,hi' in ppm, got '{text}'")
        return cls(float(parts[0]), float(parts[1]))

    def __str__(self) -> str:
        if self.is_whole:
            return "whole"
        return f"{self.lo_ppm!r},{self.hi_ppm!r}"


@dataclass(frozen=True)
class Spectrum1D:
    """Complex spectrum stored as separate real and imaginary vectors."""

    real: np.ndarray
    imag: np.ndarray
    spectral_width: float  # Hz
    transmitter_offset: float  # Hz
    spectrometer_freq: float  # MHz

    def __post_init__(self):
        real = np.asarray(self.real, dtype=float)
        imag = np.asarray(self.imag, dtype=float)
        if real.ndim != 1 or real.shape != imag.shape or real.size == 0:
            raise ValueError("real and imag must be nonempty vectors of equal length")
        if self.spectral_width <= 0 or self.spectrometer_freq <= 0:
            raise ValueError("spectral width and spectrometer frequency must be positive")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "imag", imag)

    @property
    def n_points(self) -> int:
        return int(self.real.size)

    @classmethod
    def from_complex(
        cls,
        data: np.ndarray,
        spectral_width: float,
        transmitter_offset: float,
        spectrometer_freq: float,
    ) -> "Spectrum1D":
        data = np.asarray(data, dtype=complex)
        return cls(data.real.copy(), data.imag.copy(), spectral_width,
                   transmitter_offset, spectrometer_freq)

    @classmethod
    def zeros_like(cls, other: "Spectrum1D") -> "Spectrum1D":
        return cls(np.zeros(other.n_points), np.zeros(other.n_points),
                   other.spectral_width, other.transmitter_offset,
                   other.spectrometer_freq)

    def hz_axis(self) -> np.ndarray:
        """Frequency of each point in Hz, descending."""
        i = np.arange(self.n_points)
        return (self.transmitter_offset + self.spectral_width / 2.0
                - i * self.spectral_width / self.n_points)

    def ppm_axis(self) -> np.ndarray:
        """Chemical shift of each point in ppm, descending."""
        return self.hz_axis() / self.spectrometer_freq

    def restricted(self, region: Region) -> "Spectrum1D":
        """
        Cut the spectrum down to a region.

        The result keeps the ppm of every retained point: its width and
        offset are recomputed for the shorter axis.
        """
        window = select_region(self, region)
        n = window.stop - window.start
        step = self.spectral_width / self.n_points
        first_hz = self.hz_axis()[window.start]
        width = step * n
        offset = first_hz - width / 2.0
        return Spectrum1D(self.real[window].copy(), self.imag[window].copy(),
                          width, offset, self.spectrometer_freq)


def select_region(s: Spectrum1D, r: Region) -> slice:
    """
    Contiguous index range of the points whose ppm lies in [lo, hi].

    Args:
        s: Spectrum providing the axis
        r: Region, or the whole-spectrum sentinel

    Returns:
        slice(start, stop) into the spectrum's vectors

    Raises:
        EmptyRegionError: if no point falls inside the region
    """
    if r.is_whole:
        return slice(0, s.n_points)
    ppm = s.ppm_axis()
    inside = np.flatnonzero((ppm >= r.lo_ppm) & (ppm <= r.hi_ppm))
    if inside.size == 0:
        axis_hi, axis_lo = ppm[0], ppm[-1]
        raise EmptyRegionError(
            f"region {r.lo_ppm}-{r.hi_ppm} ppm misses the axis "
            f"({axis_lo:.4f}-{axis_hi:.4f} ppm)"
        )
    return slice(int(inside[0]), int(inside[-1]) + 1)


def sum_real(s: Spectrum1D, r: Region) -> float:
    return float(np.sum(s.real[select_region(s, r)]))


def sum_abs_real(s: Spectrum1D, r: Region) -> float:
    return float(np.sum(np.abs(s.real[select_region(s, r)])))


def sum_sq_real(s: Spectrum1D, r: Region) -> float:
    return float(np.sum(s.real[select_region(s, r)] ** 2))


def sum_magnitude(s: Spectrum1D, r: Region) -> float:
    window = select_region(s, r)
    return float(np.sum(np.hypot(s.real[window], s.imag[window])))
