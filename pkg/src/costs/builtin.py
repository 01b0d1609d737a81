"""
Built-in cost functions.

Every cost is minimised. Costs that reward intensity return its negative.
"""

import numpy as np

from spectra import Region, Spectrum1D, select_region, sum_abs_real, sum_magnitude
from spectra import sum_real, sum_sq_real
from utils.errors import (
    DegenerateNormalizationError,
    DegenerateReferenceError,
    MissingContextError,
)

from .context import CostContext

NOE_EXCISION_HZ = 50.0
DOSY_TARGET_RATIO = 0.25


def minabsint(ctx: CostContext) -> float:
    """Total magnitude intensity; zero for a perfect 360 degree pulse."""
    return sum_magnitude(ctx.require_spectrum(), ctx.region)


def maxrealint(ctx: CostContext) -> float:
    """Negative real intensity."""
    return -sum_real(ctx.require_spectrum(), ctx.region)


def zerorealint(ctx: CostContext) -> float:
    return sum_abs_real(ctx.require_spectrum(), ctx.region)


def zerorealint_squared(ctx: CostContext) -> float:
    return sum_sq_real(ctx.require_spectrum(), ctx.region)


def noe_1d(ctx: CostContext) -> float:
    """
    Negative magnitude intensity outside the selectively excited peak.

    A band of NOE_EXCISION_HZ total width centred on
    aux["excitation_offset_hz"] is removed before summing.
    """
    s = ctx.require_spectrum()
    offset = ctx.require_aux("excitation_offset_hz")
    hz = s.hz_axis()
    if not hz[-1] <= offset <= hz[0]:
        raise ValueError(f"excitation offset {offset} Hz lies outside the spectral width")

    window = select_region(s, ctx.region)
    keep = np.abs(hz[window] - offset) > NOE_EXCISION_HZ / 2.0
    magnitude = np.hypot(s.real[window], s.imag[window])
    return -float(np.sum(magnitude[keep]))


def specdiff(ctx: CostContext) -> float:
    """Euclidean distance between the unit-normalised spectrum and target."""
    s = ctx.require_spectrum()
    t = ctx.require_target()
    s_real = s.real[select_region(s, ctx.region)]
    t_real = t.real[select_region(t, ctx.region)]
    if s_real.size != t_real.size:
        raise ValueError(
            f"spectrum and target regions differ in length ({s_real.size} vs {t_real.size})"
        )

    s_norm = np.linalg.norm(s_real)
    t_norm = np.linalg.norm(t_real)
    if s_norm == 0 or t_norm == 0:
        raise DegenerateNormalizationError("cannot normalise an all-zero spectrum")
    return float(np.linalg.norm(s_real / s_norm - t_real / t_norm))


def asaphsqc_cost(ctx: CostContext) -> float:
    """Negative sum of the f2 projection."""
    projection = ctx.spectrum
    if isinstance(projection, Spectrum1D):
        return -sum_real(projection, ctx.region)
    if projection is None:
        raise MissingContextError("asaphsqc needs a projection")
    return -float(np.sum(np.asarray(projection, dtype=float)))


def dosy_f_att(ctx: CostContext) -> float:
    """Attenuated-to-reference intensity ratio minus the 25% target."""
    s = ctx.require_spectrum()
    reference_sum = sum_real(ctx.require_reference(), ctx.region)
    if reference_sum == 0:
        raise DegenerateReferenceError("reference spectrum sums to zero")
    return sum_real(s, ctx.region) / reference_sum - DOSY_TARGET_RATIO


def dosy_aux(ctx: CostContext) -> float:
    return dosy_f_att(ctx)


def dosy_cost(ctx: CostContext) -> float:
    return abs(dosy_f_att(ctx))


def dosy_2p(ctx: CostContext) -> float:
    """|f_att| plus the diffusion delay in seconds, favouring short delays."""
    return abs(dosy_f_att(ctx)) + ctx.require_aux("delta_s")


def restrict_context(ctx: CostContext, region: Region) -> CostContext:
    """Copy of a context whose spectra are cut down to a region."""
    def cut(s):
        return s.restricted(region) if isinstance(s, Spectrum1D) else s

    return CostContext(cut(ctx.spectrum), Region.whole(), cut(ctx.target),
                       cut(ctx.reference), dict(ctx.aux), ctx.fid)
