"""EPSI FID fixtures: header "ppg ngp gd gap", then one "re im" pair per line."""

import os

import numpy as np

from utils.errors import FixtureFormatError

from .pipeline import EpsiFid


def write_fid_fixture(fid: EpsiFid, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    header = (f"{fid.points_per_gradient} {fid.n_gradient_pairs} "
              f"{fid.group_delay} {fid.gap_points}")
    np.savetxt(path, np.column_stack([fid.samples.real, fid.samples.imag]),
               fmt="%.17g", header=header, comments="")


def read_fid_fixture(path: str) -> EpsiFid:
    """Read an FID fixture written by write_fid_fixture()."""
    if not os.path.exists(path):
        raise FileNotFoundError(f"FID fixture not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        fields = f.readline().split()
    try:
        ppg, ngp, gd, gap = (int(v) for v in fields)
    except ValueError:
        raise FixtureFormatError(f"{path}: header must be four integers 'ppg ngp gd gap'")

    try:
        data = np.loadtxt(path, skiprows=1, ndmin=2)
    except ValueError as e:
        raise FixtureFormatError(f"{path}: {e}")
    if data.shape[1] != 2:
        raise FixtureFormatError(f"{path}: expected 're im' pairs")
    return EpsiFid(data[:, 0] + 1j * data[:, 1], ppg, ngp, gd, gap)
