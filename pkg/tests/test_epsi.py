"""
Test suite for the EPSI pipeline and gradient-drift cost.
"""

import unittest
import sys
import os
import tempfile
from dataclasses import replace
from types import SimpleNamespace

import numpy as np

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from epsi import (
    EpsiFid,
    KtMatrix,
    drift_slope,
    epsi_gradient_drift,
    read_fid_fixture,
    remove_group_delay,
    reshape_and_filter,
    sine_bell,
    write_fid_fixture,
)
from utils.errors import (
    FixtureFormatError,
    InsufficientSignalError,
    MissingContextError,
    TruncatedFidError,
)


def build_fid(centres, ppg=64, gap=0, group_delay=0, width=1.5):
    """FID with one Gaussian echo per positive segment at the given k-indices."""
    k = np.arange(ppg)
    pairs = []
    for centre in centres:
        echo = np.exp(-((k - centre) ** 2) / (2.0 * width ** 2))
        pairs.append(np.concatenate([echo, np.zeros(gap), echo[::-1], np.zeros(gap)]))
    stream = np.concatenate(pairs).astype(complex)
    return EpsiFid(np.roll(stream, group_delay), ppg, len(centres), group_delay, gap)


def one_hot_rows(positions, k_max=64, heights=None):
    values = np.zeros((len(positions), k_max))
    heights = np.ones(len(positions)) if heights is None else heights
    for row, (k, h) in enumerate(zip(positions, heights)):
        values[row, k] = h
    return KtMatrix(values)


class TestGroupDelay(unittest.TestCase):
    """Test circular group-delay removal."""

    def test_identity(self):
        """A zero group delay leaves the samples unchanged."""
        fid = EpsiFid(np.arange(4), 1, 1)
        np.testing.assert_array_equal(remove_group_delay(fid).samples, fid.samples)

    def test_rotation(self):
        """[a, b, c, d] with delay 1 becomes [b, c, d, a]."""
        fid = EpsiFid(np.array([1, 2, 3, 4]), 1, 1, group_delay=1)
        shifted = remove_group_delay(fid)
        np.testing.assert_array_equal(shifted.samples, [2, 3, 4, 1])
        self.assertEqual(shifted.group_delay, 0)

    def test_composition(self):
        """Two removals with d1 and d2 equal one with (d1 + d2) mod length."""
        samples = np.arange(10) + 1j * np.arange(10)
        for d1, d2 in [(0, 3), (2, 5), (7, 6), (9, 9)]:
            with self.subTest(d1=d1, d2=d2):
                once = remove_group_delay(EpsiFid(samples, 1, 1, group_delay=d1))
                twice = remove_group_delay(replace(once, group_delay=d2))
                direct = remove_group_delay(EpsiFid(samples, 1, 1,
                                                    group_delay=(d1 + d2) % 10))
                np.testing.assert_array_equal(twice.samples, direct.samples)

    def test_delay_too_long(self):
        """A delay as long as the FID is rejected."""
        with self.assertRaises(ValueError):
            remove_group_delay(EpsiFid(np.ones(4), 1, 1, group_delay=4))


class TestReshapeAndFilter(unittest.TestCase):
    """Test building the (k, t2) matrix."""

    def test_shape(self):
        """Three pairs of 64 points give a 3 x 64 matrix."""
        m = reshape_and_filter(build_fid([10, 20, 30], ppg=64, gap=4))
        self.assertEqual(m.values.shape, (3, 64))
        self.assertEqual(m.k_max, 64)
        self.assertTrue(np.all(m.values >= 0))

    def test_constant_fid(self):
        """A constant-magnitude FID gives identical rows."""
        fid = EpsiFid(np.full(5 * 2 * 32, 2.0 - 1.0j), 32, 5)
        m = reshape_and_filter(fid)
        for row in m.values[1:]:
            np.testing.assert_array_equal(row, m.values[0])
        np.testing.assert_allclose(m.values[0], np.sqrt(5.0) * sine_bell(32))

    def test_single_echo_position(self):
        """An echo at k = 10 in every segment puts every row's maximum at 10."""
        fid = build_fid([10] * 6, ppg=64, gap=2, group_delay=7)
        m = reshape_and_filter(remove_group_delay(fid))
        np.testing.assert_array_equal(np.argmax(m.values, axis=1), [10] * 6)

    def test_negative_segments_discarded(self):
        """Only positive-gradient data reach the matrix."""
        fid = build_fid([10, 10], ppg=64)
        samples = fid.samples.copy()
        samples[64:128] = 0.0
        samples[192:256] = 1e3
        m1 = reshape_and_filter(fid)
        m2 = reshape_and_filter(replace(fid, samples=samples))
        np.testing.assert_array_equal(m1.values, m2.values)

    def test_preconditions(self):
        """Group delay must be removed and the FID must be long enough."""
        with self.assertRaises(ValueError):
            reshape_and_filter(build_fid([10, 10], group_delay=3))
        short = EpsiFid(np.ones(100), 64, 2)
        with self.assertRaises(TruncatedFidError):
            reshape_and_filter(short)

    def test_sine_bell(self):
        """The window starts at zero and peaks mid-segment."""
        window = sine_bell(64)
        self.assertEqual(window[0], 0.0)
        self.assertEqual(int(np.argmax(window)), 32)


class TestDriftSlope(unittest.TestCase):
    """Test the echo-position regression."""

    def test_constant_position(self):
        """Rows peaking at the same k give slope 0."""
        self.assertEqual(drift_slope(one_hot_rows([17] * 8)), 0.0)

    def test_linear_positions(self):
        """Maxima at 10, 12, 14, 16 over 64 columns give 2/64 per row."""
        self.assertAlmostEqual(drift_slope(one_hot_rows([10, 12, 14, 16])), 2.0 / 64.0)
        self.assertAlmostEqual(drift_slope(one_hot_rows([16, 14, 12, 10])), -2.0 / 64.0)

    def test_weak_rows_dropped(self):
        """Rows below the threshold do not enter the fit."""
        m = one_hot_rows([10, 50, 12, 14, 3], heights=[1.0, 0.05, 1.0, 1.0, 0.01])
        # surviving rows 0, 2, 3 at k = 10, 12, 14: slope 9/7 k per row
        self.assertAlmostEqual(drift_slope(m), (9.0 / 7.0) / 64.0)

    def test_insufficient_signal(self):
        """Fewer than two surviving rows raise InsufficientSignalError."""
        with self.assertRaises(InsufficientSignalError):
            drift_slope(one_hot_rows([10, 20], heights=[1.0, 0.01]))
        with self.assertRaises(InsufficientSignalError):
            drift_slope(KtMatrix(np.zeros((4, 8))))
        with self.assertRaises(ValueError):
            drift_slope(one_hot_rows([1, 2]), threshold_frac=1.5)

    def test_constructed_drift(self):
        """A drift of c k-points per pair is recovered within 5%."""
        for c in (0.8, -1.7, 2.5):
            with self.subTest(c=c):
                centres = 100.0 + c * np.arange(32) + (60.0 if c < 0 else 0.0)
                fid = build_fid(centres, ppg=256, gap=4, width=2.0)
                slope = drift_slope(reshape_and_filter(fid))
                self.assertAlmostEqual(slope, c / 256.0, delta=0.05 * abs(c) / 256.0)

    def test_negative_values_rejected(self):
        """A (k, t2) matrix holds magnitudes only."""
        with self.assertRaises(ValueError):
            KtMatrix(-np.ones((2, 2)))


class TestGradientDriftCost(unittest.TestCase):
    """Test the full pipeline cost."""

    def test_aligned_echoes(self):
        """Aligned echoes cost exactly zero."""
        fid = build_fid([40] * 16, ppg=128, gap=3, group_delay=11)
        self.assertEqual(epsi_gradient_drift(SimpleNamespace(fid=fid)), 0.0)

    def test_absolute_slope(self):
        """The cost is the magnitude of the drift slope."""
        up = build_fid(30.0 + np.arange(16), ppg=128)
        down = build_fid(45.0 - np.arange(16), ppg=128)
        cost_up = epsi_gradient_drift(SimpleNamespace(fid=up))
        self.assertGreater(cost_up, 0.0)
        self.assertAlmostEqual(cost_up, epsi_gradient_drift(SimpleNamespace(fid=down)))

    def test_global_scaling(self):
        """Scaling the FID leaves the cost unchanged."""
        fid = build_fid(50.0 + 0.6 * np.arange(20), ppg=128, gap=2, group_delay=5)
        base = epsi_gradient_drift(SimpleNamespace(fid=fid))
        for factor in (1e-6, 3.0, -2.0j, 1e6):
            scaled = replace(fid, samples=factor * fid.samples)
            self.assertEqual(epsi_gradient_drift(SimpleNamespace(fid=scaled)), base)

    def test_missing_fid(self):
        """A context without an FID is an error."""
        with self.assertRaises(MissingContextError):
            epsi_gradient_drift(SimpleNamespace(fid=None))


class TestFidFixtures(unittest.TestCase):
    """Test the FID fixture format."""

    def test_write_and_read(self):
        """A fixture reads back with its geometry and samples."""
        fid = build_fid([10, 12, 14], ppg=32, gap=2, group_delay=5)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "epsi", "fid.txt")
            write_fid_fixture(fid, path)
            with open(path, "r", encoding="utf-8") as f:
                self.assertEqual(f.readline().split(), ["32", "3", "5", "2"])
            back = read_fid_fixture(path)
        np.testing.assert_array_equal(back.samples, fid.samples)
        self.assertEqual((back.points_per_gradient, back.n_gradient_pairs,
                          back.group_delay, back.gap_points), (32, 3, 5, 2))

    def test_bad_header(self):
        """A header without four integers is rejected."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "fid.txt")
            with open(path, "w", encoding="utf-8") as f:
                f.write("32 3 x\n1 0\n")
            with self.assertRaises(FixtureFormatError):
                read_fid_fixture(path)


if __name__ == "__main__":
    unittest.main()
