"""
EPSI (k, t2) processing and the gradient-drift cost.

An EPSI readout alternates positive and negative gradients. Each gradient
pair contributes one t2 row: the positive-gradient segment traces k, the
negative one is thrown away. When the negative gradient is mis-scaled the
echo walks across k from row to row, and the slope of that walk is the
cost to be minimised.

Acquisition layout per gradient pair (after group delay removal):

    [ positive: ppg points | gap | negative: ppg points | gap ]
"""

from dataclasses import dataclass, replace
from typing import Any

import numpy as np

from utils.errors import InsufficientSignalError, MissingContextError, TruncatedFidError

DEFAULT_THRESHOLD_FRAC = 0.1


@dataclass(frozen=True)
class EpsiFid:
    """Time-domain EPSI samples plus acquisition geometry."""

    samples: np.ndarray
    points_per_gradient: int
    n_gradient_pairs: int
    group_delay: int = 0
    gap_points: int = 0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError("samples must be a nonempty vector")
        if self.points_per_gradient < 1 or self.n_gradient_pairs < 1:
            raise ValueError("points_per_gradient and n_gradient_pairs must be positive")
        if self.group_delay < 0 or self.gap_points < 0:
            raise ValueError("group_delay and gap_points must be non-negative")
        object.__setattr__(self, "samples", samples)

    @property
    def pair_length(self) -> int:
        """Samples spanned by one positive/negative gradient pair."""
        return 2 * self.points_per_gradient + 2 * self.gap_points

    @property
    def required_length(self) -> int:
        return self.group_delay + self.n_gradient_pairs * self.pair_length


@dataclass(frozen=True)
class KtMatrix:
    """Magnitude data indexed by (t2 row, k column)."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise ValueError("a (k, t2) matrix must be two-dimensional")
        if np.any(values < 0):
            raise ValueError("(k, t2) magnitudes must be non-negative")
        object.__setattr__(self, "values", values)

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def k_max(self) -> int:
        return self.values.shape[1]


def remove_group_delay(fid: EpsiFid) -> EpsiFid:
    """Circularly shift the samples left by the group delay."""
    if fid.group_delay >= fid.samples.size:
        raise ValueError(
            f"group delay {fid.group_delay} not shorter than the FID ({fid.samples.size})"
        )
    return replace(fid, samples=np.roll(fid.samples, -fid.group_delay), group_delay=0)


def sine_bell(n: int) -> np.ndarray:
    """Sine-bell window over n points, zero at the first point and peaking at n/2."""
    return np.sin(np.pi * np.arange(n) / n)


def reshape_and_filter(fid: EpsiFid) -> KtMatrix:
    """
    Build the (k, t2) magnitude matrix from positive-gradient segments.

    Args:
        fid: FID with its group delay already removed

    Returns:
        KtMatrix with one row per gradient pair, points_per_gradient wide

    Raises:
        ValueError: if the group delay has not been removed
        TruncatedFidError: if the FID is shorter than its geometry needs
    """
    if fid.group_delay != 0:
        raise ValueError("remove the group delay before reshaping")
    if fid.samples.size < fid.required_length:
        raise TruncatedFidError(
            f"FID has {fid.samples.size} points; {fid.n_gradient_pairs} gradient "
            f"pairs need {fid.required_length}"
        )

    ppg = fid.points_per_gradient
    pairs = fid.samples[: fid.n_gradient_pairs * fid.pair_length]
    pairs = pairs.reshape(fid.n_gradient_pairs, fid.pair_length)
    positive = pairs[:, :ppg] * sine_bell(ppg)
    return KtMatrix(np.abs(positive))


def drift_slope(m: KtMatrix, threshold_frac: float = DEFAULT_THRESHOLD_FRAC) -> float:
    """
    Least-squares slope of the echo position k/k_max against row index.

    Rows whose maximum is below threshold_frac of the global maximum are
    dropped before fitting.

    Raises:
        ValueError: if threshold_frac is not in (0, 1)
        InsufficientSignalError: if fewer than two rows survive
    """
    if not 0.0 < threshold_frac < 1.0:
        raise ValueError(f"threshold_frac must lie in (0, 1), got {threshold_frac}")

    row_max = m.values.max(axis=1)
    keep = np.flatnonzero(row_max >= threshold_frac * row_max.max())
    if keep.size < 2 or row_max.max() <= 0:
        raise InsufficientSignalError(
            f"only {keep.size} of {m.n_rows} rows above {threshold_frac:g} of the maximum"
        )

    k = np.argmax(m.values[keep], axis=1).astype(float)
    t = keep.astype(float) - keep.mean()
    # integer argmax positions keep a constant row set exactly at zero slope
    slope = float(np.sum(t * (k - k.mean())) / np.sum(t * t))
    return slope / m.k_max


def epsi_gradient_drift(ctx: Any) -> float:
    """Absolute echo drift of the FID carried by the cost context."""
    fid = getattr(ctx, "fid", None)
    if fid is None:
        raise MissingContextError("epsi_gradient_drift needs an EPSI FID")
    return abs(drift_slope(reshape_and_filter(remove_group_delay(fid))))
