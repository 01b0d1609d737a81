"""
Surrogate experiment models.

Each model produces frequency-domain data directly (EPSI excepted) from a
closed-form intensity law whose optimum is known analytically. Peaks are
complex Lorentzians of fixed width on a fixed ppm layout per sample.

Noise is additive complex Gaussian with standard deviation
SimConfig.noise_sigma relative to unit peak height. It is drawn from the
generator passed in; with no generator the data are noise-free.
"""

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import brentq

from epsi import EpsiFid
from spectra import Spectrum1D
from utils.errors import SimConfigError

from .config import SimConfig, create_default_sim_config

RealOrList = Union[float, Sequence[float]]


@dataclass(frozen=True)
class SampleLayout:
    """Spectral window and line width of one simulated sample."""

    sfo_mhz: float
    sw_ppm: float
    centre_ppm: float
    n_points: int
    linewidth_hz: float

    @property
    def sw_hz(self) -> float:
        return self.sw_ppm * self.sfo_mhz

    @property
    def offset_hz(self) -> float:
        return self.centre_ppm * self.sfo_mhz

    def hz_axis(self) -> np.ndarray:
        i = np.arange(self.n_points)
        return self.offset_hz + self.sw_hz / 2.0 - i * self.sw_hz / self.n_points

    def lines(self, peaks: Sequence[Tuple[float, float]]) -> np.ndarray:
        """Sum of complex Lorentzians: absorption in real, dispersion in imag."""
        hz = self.hz_axis()
        half_width = self.linewidth_hz / 2.0
        data = np.zeros(self.n_points, dtype=complex)
        for ppm, amplitude in peaks:
            x = (hz - ppm * self.sfo_mhz) / half_width
            data += amplitude / (1.0 - 1j * x)
        return data

    def spectrum(self, data: np.ndarray) -> Spectrum1D:
        return Spectrum1D.from_complex(data, self.sw_hz, self.offset_hz, self.sfo_mhz)


# Ferulic acid at 500 MHz, SW 14 ppm, 64k points
FERULIC = SampleLayout(500.0, 14.0, 4.7, 65536, 6.0)
FERULIC_PEAKS_PPM = (7.49, 7.27, 7.08, 6.79, 6.36, 3.49)

NOE_SAMPLE = SampleLayout(700.0, 12.0, 4.7, 16384, 2.0)
NOE_EXCITED_PPM = 7.08
NOE_PARTNERS = ((7.27, 0.05), (6.79, 0.03), (6.36, 0.02))

WATER_SAMPLE = SampleLayout(400.0, 12.0, 4.7, 16384, 2.0)
WATER_ANALYTES = ((4.56, 0.1), (5.15, 0.1))

DOSY_SAMPLE = SampleLayout(600.0, 10.0, 4.7, 8192, 3.0)
DOSY_PEAKS = ((7.20, 1.0), (3.60, 0.8), (1.20, 0.6))

ASAP_SAMPLE = SampleLayout(600.0, 10.0, 4.7, 4096, 8.0)
ASAP_PEAKS = ((7.30, 1.0), (4.10, 0.7), (1.30, 0.5))

PSYCHE_SAMPLE = SampleLayout(500.0, 10.0, 4.7, 8192, 1.0)

EPSI_POINTS_PER_GRADIENT = 256
EPSI_GRADIENT_PAIRS = 32
EPSI_GAP_POINTS = 4
EPSI_GROUP_DELAY = 68
EPSI_K0 = 128
EPSI_ECHO_WIDTH = 4.0
# k-index walk across all pairs per unit of gradient-ratio error
EPSI_DRIFT_SPAN = 10000.0

# (optimum, scale) of the PSYCHE parameters other than the flip angle
PSYCHE_PARAMETER_OPTIMA = {
    "gpz10": (1.5, 3.0),
    "cnst21": (15900.0, 15000.0),
    "p40": (36000.0, 50000.0),
}
PSYCHE_DEFAULTS = {"cnst20": 20.0, "gpz10": 2.0, "cnst21": 10000.0, "p40": 30000.0}


def _config(cfg: Optional[SimConfig]) -> SimConfig:
    return cfg if cfg is not None else create_default_sim_config()


def _noise(n: int, cfg: SimConfig, rng: Optional[np.random.Generator]) -> np.ndarray:
    if rng is None or cfg.noise_sigma <= 0:
        return np.zeros(n, dtype=complex)
    return cfg.noise_sigma * (rng.standard_normal(n) + 1j * rng.standard_normal(n))


def _per_peak(values: RealOrList, n: int) -> np.ndarray:
    return np.resize(np.atleast_1d(np.asarray(values, dtype=float)), n)


# --- pulse calibration ------------------------------------------------------

def sim_pulse_acquire(p1: float, cfg: Optional[SimConfig] = None,
                      rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """Pulse-acquire spectrum; every peak scales as sin(2 pi p1 / p360)."""
    cfg = _config(cfg)
    if p1 <= 0:
        raise ValueError(f"pulse width must be positive, got {p1}")
    amplitude = math.sin(2.0 * math.pi * p1 / cfg.p360_true)
    data = FERULIC.lines([(ppm, amplitude) for ppm in FERULIC_PEAKS_PPM])
    return FERULIC.spectrum(data + _noise(FERULIC.n_points, cfg, rng))


# --- Ernst angle and inversion recovery -------------------------------------

def ernst_angle(tau_r: float, t1: float) -> float:
    """Flip angle in degrees maximising steady-state signal: cos = exp(-tau_r/T1)."""
    return math.degrees(math.acos(math.exp(-tau_r / t1)))


def invrec_null(t1: float) -> float:
    """Inversion-recovery delay giving zero signal."""
    return t1 * math.log(2.0)


def sim_ernst(flip_deg: float, tau_r: float, t1: RealOrList,
              cfg: Optional[SimConfig] = None,
              rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """
    Steady-state pulse-acquire spectrum at a given flip angle.

    Args:
        flip_deg: Flip angle in degrees, in (0, 180)
        tau_r: Repetition time (s)
        t1: One T1 for all peaks, or one per ferulic acid peak
    """
    cfg = _config(cfg)
    if not 0 < flip_deg < 180:
        raise ValueError(f"flip angle must lie in (0, 180) degrees, got {flip_deg}")
    theta = math.radians(flip_deg)
    e = np.exp(-tau_r / _per_peak(t1, len(FERULIC_PEAKS_PPM)))
    amplitudes = math.sin(theta) * (1.0 - e) / (1.0 - e * math.cos(theta))
    data = FERULIC.lines(list(zip(FERULIC_PEAKS_PPM, amplitudes)))
    return FERULIC.spectrum(data + _noise(FERULIC.n_points, cfg, rng))


def sim_invrec(tau: float, t1: RealOrList, cfg: Optional[SimConfig] = None,
               rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """Inversion-recovery spectrum; each peak scales as 1 - 2 exp(-tau/T1)."""
    cfg = _config(cfg)
    if tau < 0:
        raise ValueError(f"recovery delay must not be negative, got {tau}")
    amplitudes = 1.0 - 2.0 * np.exp(-tau / _per_peak(t1, len(FERULIC_PEAKS_PPM)))
    data = FERULIC.lines(list(zip(FERULIC_PEAKS_PPM, amplitudes)))
    return FERULIC.spectrum(data + _noise(FERULIC.n_points, cfg, rng))


# --- NOE ---------------------------------------------------------------------

def noe_buildup(tau_m: float, cfg: Optional[SimConfig] = None) -> float:
    """Relative crosspeak intensity (1 - exp(-sigma tau)) exp(-R1 tau)."""
    cfg = _config(cfg)
    return (1.0 - math.exp(-cfg.noe_sigma * tau_m)) * math.exp(-cfg.noe_r1 * tau_m)


def noe_excitation_offset_hz() -> float:
    """Absolute frequency of the selectively excited peak."""
    return NOE_EXCITED_PPM * NOE_SAMPLE.sfo_mhz


def sim_noe1d(tau_m: float, cfg: Optional[SimConfig] = None,
              rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """Selective 1D NOE spectrum: fixed excited peak plus growing crosspeaks."""
    cfg = _config(cfg)
    if tau_m < 0:
        raise ValueError(f"mixing time must not be negative, got {tau_m}")
    buildup = noe_buildup(tau_m, cfg)
    peaks = [(NOE_EXCITED_PPM, 1.0)]
    peaks += [(ppm, weight * buildup) for ppm, weight in NOE_PARTNERS]
    data = NOE_SAMPLE.lines(peaks)
    return NOE_SAMPLE.spectrum(data + _noise(NOE_SAMPLE.n_points, cfg, rng))


# --- EPSI --------------------------------------------------------------------

def epsi_echo_centres(alpha: float, cfg: Optional[SimConfig] = None) -> np.ndarray:
    """k-index of the echo in each positive-gradient segment."""
    cfg = _config(cfg)
    drift = EPSI_DRIFT_SPAN / (EPSI_GRADIENT_PAIRS - 1)
    n = np.arange(EPSI_GRADIENT_PAIRS)
    centres = EPSI_K0 + drift * (alpha - cfg.alpha_true) * n
    return np.clip(centres, 0, EPSI_POINTS_PER_GRADIENT - 1)


def sim_epsi_fid(alpha: float, cfg: Optional[SimConfig] = None,
                 rng: Optional[np.random.Generator] = None) -> EpsiFid:
    """
    EPSI FID at a given negative/positive gradient ratio.

    Echoes drift linearly in k with pair index, in proportion to
    alpha - alpha_true, and decay over the acquisition. Negative-gradient
    segments hold the time-reversed echo.
    """
    cfg = _config(cfg)
    ppg = EPSI_POINTS_PER_GRADIENT
    pairs = EPSI_GRADIENT_PAIRS
    pair_length = 2 * ppg + 2 * EPSI_GAP_POINTS

    k = np.arange(ppg)
    centres = epsi_echo_centres(alpha, cfg)[:, np.newaxis]
    decay = np.exp(-np.arange(pairs) / (2.0 * pairs))[:, np.newaxis]
    echoes = np.exp(-((k - centres) ** 2) / (2.0 * EPSI_ECHO_WIDTH ** 2)) * decay

    block = np.zeros((pairs, pair_length), dtype=complex)
    block[:, :ppg] = echoes
    block[:, ppg + EPSI_GAP_POINTS: 2 * ppg + EPSI_GAP_POINTS] = echoes[:, ::-1]

    stream = np.concatenate([block.ravel(), np.zeros(EPSI_GROUP_DELAY, dtype=complex)])
    stream = stream + _noise(stream.size, cfg, rng)
    return EpsiFid(np.roll(stream, EPSI_GROUP_DELAY), ppg, pairs,
                   EPSI_GROUP_DELAY, EPSI_GAP_POINTS)


# --- presaturation -----------------------------------------------------------

def presat_residual(o1: float, power: float, d8: float, d1: float,
                    cfg: Optional[SimConfig] = None) -> float:
    """
    Residual water amplitude after presaturation.

    Saturation is exp(-k P^2 t L) with t = d1 + d8 and L a Lorentzian in the
    offset error; a sin^2 ripple in the offset error adds local minima.
    """
    cfg = _config(cfg)
    detuning = o1 - cfg.water_offset_hz
    ripple = 1.0 + cfg.water_ripple * math.sin(
        math.pi * detuning / cfg.water_ripple_period_hz) ** 2
    lorentzian = 1.0 / (1.0 + (detuning / cfg.water_width_hz) ** 2)
    saturation = math.exp(-cfg.water_sat_rate * power ** 2 * (d1 + d8) * lorentzian)
    return cfg.water_w0 * ripple * saturation


def water_ppm(cfg: Optional[SimConfig] = None) -> float:
    return _config(cfg).water_offset_hz / WATER_SAMPLE.sfo_mhz


def sim_presat(o1: float, power: float, d8: float, d1: float,
               cfg: Optional[SimConfig] = None,
               rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """Water-suppressed spectrum with two analyte peaks flanking the water line."""
    cfg = _config(cfg)
    if power < 0 or d8 < 0 or d1 < 0:
        raise ValueError("presaturation power and delays must not be negative")
    peaks = [(water_ppm(cfg), presat_residual(o1, power, d8, d1, cfg))]
    peaks += list(WATER_ANALYTES)
    data = WATER_SAMPLE.lines(peaks)
    return WATER_SAMPLE.spectrum(data + _noise(WATER_SAMPLE.n_points, cfg, rng))


# --- DOSY --------------------------------------------------------------------

def dosy_attenuation(g_percent: float, delta_big: float,
                     cfg: Optional[SimConfig] = None) -> float:
    """Stejskal-Tanner attenuation exp(-D gamma^2 delta^2 G^2 (Delta - delta/3))."""
    cfg = _config(cfg)
    g = g_percent / 100.0
    return math.exp(-cfg.diffusion_rate * g ** 2 * (delta_big - cfg.delta / 3.0))


def dosy_ratio(g_percent: float, delta_big: float, g_ref: float = 10.0,
               cfg: Optional[SimConfig] = None) -> float:
    """Intensity at g_percent relative to the reference amplitude."""
    return (dosy_attenuation(g_percent, delta_big, cfg)
            / dosy_attenuation(g_ref, delta_big, cfg))


def dosy_target_gradient(delta_big: float, target_ratio: float = 0.25,
                         g_ref: float = 10.0,
                         cfg: Optional[SimConfig] = None) -> float:
    """Gradient amplitude (%) at which dosy_ratio equals target_ratio."""
    cfg = _config(cfg)
    rate = cfg.diffusion_rate * (delta_big - cfg.delta / 3.0)
    if rate <= 0:
        return math.inf
    return 100.0 * math.sqrt((g_ref / 100.0) ** 2 + math.log(1.0 / target_ratio) / rate)


def sim_dosy(g_percent: float, delta_big: float, cfg: Optional[SimConfig] = None,
             rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """Diffusion-weighted spectrum at a gradient amplitude (%) and delay (s)."""
    cfg = _config(cfg)
    if delta_big < cfg.delta:
        raise ValueError(
            f"diffusion delay {delta_big} s shorter than the gradient pulse {cfg.delta} s"
        )
    attenuation = dosy_attenuation(g_percent, delta_big, cfg)
    data = DOSY_SAMPLE.lines([(ppm, a * attenuation) for ppm, a in DOSY_PEAKS])
    return DOSY_SAMPLE.spectrum(data + _noise(DOSY_SAMPLE.n_points, cfg, rng))


# --- ASAP-HSQC ---------------------------------------------------------------

def inept_transfer(cnst3: float, cfg: Optional[SimConfig] = None) -> float:
    """sin(pi J / (2 c)) exp(-R2 / (2 c)) for an INEPT delay of 1/(4 c)."""
    cfg = _config(cfg)
    return (math.sin(math.pi * cfg.inept_j_hz / (2.0 * cnst3))
            * math.exp(-cfg.inept_r2 / (2.0 * cnst3)))


def asap_optimum(cfg: Optional[SimConfig] = None) -> float:
    """cnst3 (Hz) maximising inept_transfer()."""
    cfg = _config(cfg)
    pij = math.pi * cfg.inept_j_hz
    return pij / (2.0 * math.atan(pij / cfg.inept_r2))


def sim_asap_projection(cnst3: float, cfg: Optional[SimConfig] = None,
                        rng: Optional[np.random.Generator] = None) -> Spectrum1D:
    """f2 projection of an ASAP-HSQC, held in the real part of a spectrum."""
    cfg = _config(cfg)
    if cnst3 <= 0:
        raise ValueError(f"cnst3 must be positive, got {cnst3}")
    transfer = inept_transfer(cnst3, cfg)
    projection = ASAP_SAMPLE.lines([(ppm, a * transfer) for ppm, a in ASAP_PEAKS]).real
    projection = projection + _noise(ASAP_SAMPLE.n_points, cfg, rng).real
    return Spectrum1D(projection, np.zeros(ASAP_SAMPLE.n_points), ASAP_SAMPLE.sw_hz,
                      ASAP_SAMPLE.offset_hz, ASAP_SAMPLE.sfo_mhz)


# --- PSYCHE ------------------------------------------------------------------

def psyche_kappa(flip_opt_deg: float, noise_level: float) -> float:
    """
    Distortion gain placing the specdiff minimum at flip_opt_deg.

    The test spectrum is sin(b) [cos(phi) T + sin(phi) V] + noise U with
    phi = kappa b; its minimum satisfies
    kappa tan(kappa b) = cot(b) - sin(b) cos(b) / (sin^2(b) + noise^2).
    With no noise there is no interior minimum and kappa is zero.
    """
    if noise_level == 0:
        return 0.0
    beta = math.radians(flip_opt_deg)
    s, c = math.sin(beta), math.cos(beta)
    rhs = c / s - s * c / (s * s + noise_level ** 2)
    if rhs <= 0:
        raise SimConfigError(
            f"no PSYCHE optimum at {flip_opt_deg} degrees with noise {noise_level}"
        )
    upper = (math.pi / 2.0) / beta * (1.0 - 1e-9)
    return brentq(lambda k: k * math.tan(k * beta) - rhs, 1e-12, upper)


def psyche_distortion_modifier(params: Mapping[str, float]) -> float:
    """1 at the optimal gradient and chirp settings, growing quadratically away."""
    modifier = 1.0
    for name, (optimum, scale) in PSYCHE_PARAMETER_OPTIMA.items():
        value = params.get(name, PSYCHE_DEFAULTS[name])
        modifier += ((value - optimum) / scale) ** 2
    return modifier


def _psyche_basis(cfg: SimConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    target = PSYCHE_SAMPLE.lines([(ppm, 1.0) for ppm in FERULIC_PEAKS_PPM])
    noise_pattern = np.random.default_rng(cfg.rng_seed).standard_normal(
        PSYCHE_SAMPLE.n_points)
    q, r = np.linalg.qr(np.column_stack([target.real, target.imag, noise_pattern]))
    q = q * np.sign(np.diag(r))
    return target.real, q[:, 0], q[:, 1], q[:, 2]


def sim_specdiff_pair(params: Mapping[str, float],
                      cfg: Optional[SimConfig] = None) -> Tuple[Spectrum1D, Spectrum1D]:
    """
    PSYCHE test spectrum and its ideal pure-shift target.

    Signal grows with the flip angle cnst20 while a dispersive distortion
    grows faster; gpz10, cnst21 and p40 scale the distortion and are best
    at PSYCHE_PARAMETER_OPTIMA. A fixed noise pattern of level
    psyche_noise_level sets the tradeoff.
    """
    cfg = _config(cfg)
    full: Dict[str, float] = dict(PSYCHE_DEFAULTS)
    full.update(params)
    flip = full["cnst20"]
    if not 0 < flip < 180:
        raise ValueError(f"flip angle must lie in (0, 180) degrees, got {flip}")

    beta = math.radians(flip)
    kappa = psyche_kappa(cfg.psyche_flip_opt_deg, cfg.psyche_noise_level)
    phi = kappa * beta * (psyche_distortion_modifier(full)
                          / psyche_distortion_modifier(PSYCHE_DEFAULTS))

    target, t_hat, v_hat, u_hat = _psyche_basis(cfg)
    test = (math.sin(beta) * (math.cos(phi) * t_hat + math.sin(phi) * v_hat)
            + cfg.psyche_noise_level * u_hat)
    zeros = np.zeros(PSYCHE_SAMPLE.n_points)
    return (Spectrum1D(test, zeros, PSYCHE_SAMPLE.sw_hz, PSYCHE_SAMPLE.offset_hz,
                       PSYCHE_SAMPLE.sfo_mhz),
            Spectrum1D(target, zeros.copy(), PSYCHE_SAMPLE.sw_hz,
                       PSYCHE_SAMPLE.offset_hz, PSYCHE_SAMPLE.sfo_mhz))
