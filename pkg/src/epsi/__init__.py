"""EPSI processing pipeline and gradient-drift cost."""

from .pipeline import (
    DEFAULT_THRESHOLD_FRAC,
    EpsiFid,
    KtMatrix,
    remove_group_delay,
    sine_bell,
    reshape_and_filter,
    drift_slope,
    epsi_gradient_drift,
)

from .fixtures import read_fid_fixture, write_fid_fixture

__all__ = [
    "DEFAULT_THRESHOLD_FRAC",
    "EpsiFid",
    "KtMatrix",
    "remove_group_delay",
    "sine_bell",
    "reshape_and_filter",
    "drift_slope",
    "epsi_gradient_drift",
    "read_fid_fixture",
    "write_fid_fixture",
]
