"""
Test suite for the sequential and simultaneous DOSY searches.
"""

import unittest
import sys
import os
import tempfile
from dataclasses import replace

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from dosydriver import (
    DosyPlan,
    SequentialDosyDriver,
    SimultaneousDosyDriver,
    dosy_sequential,
    dosy_simultaneous,
)
from harness import parse_log
from optim import Algorithm
from simnmr import SimConfig, create_noise_free_sim_config, dosy_ratio
from utils.errors import InsufficientDiffusionWeightingError

NOISE_FREE = create_noise_free_sim_config()


class TestDosyPlan(unittest.TestCase):
    """Test phase-1 settings."""

    def test_defaults(self):
        """Delays step from 50 ms by 20 ms up to 0.5 s."""
        plan = DosyPlan()
        deltas = plan.delta_sequence()
        self.assertEqual(deltas[:3], [0.05, 0.07, 0.09])
        self.assertEqual(deltas[-1], 0.49)
        self.assertEqual(len(deltas), 23)
        self.assertAlmostEqual(plan.target_ratio, 0.25)

    def test_end_point_included(self):
        """A delay landing exactly on delta_max is tried."""
        self.assertEqual(DosyPlan(0.1, 0.1, 0.5).delta_sequence(),
                         [0.1, 0.2, 0.3, 0.4, 0.5])

    def test_invalid(self):
        """Inconsistent plans are rejected."""
        for kwargs in ({"delta_init": 0.0}, {"delta_init": 0.6}, {"delta_step": 0.0},
                       {"g_ref": 80.0}, {"target_attenuation": 1.0}):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    DosyPlan(**kwargs)


class TestSequentialDosy(unittest.TestCase):
    """Test the two-phase search."""

    def test_delay_then_gradient(self):
        """The delay settles at 110 ms and the gradient at 75%."""
        for algorithm in (Algorithm.TRUST_REGION, Algorithm.NELDER_MEAD, Algorithm.MDS):
            with self.subTest(algorithm=algorithm.value):
                driver = SequentialDosyDriver(sim=NOISE_FREE, algorithm=algorithm)
                delta, gradient, result = driver.run()
                self.assertAlmostEqual(delta, 0.11)
                self.assertAlmostEqual(gradient, 75.0, delta=2.0)
                self.assertEqual([d for d, _ in driver.probes], [0.05, 0.07, 0.09, 0.11])
                self.assertLessEqual(abs(dosy_ratio(gradient, delta) - 0.25), 0.01)
                # every probe and evaluation is counted with its reference
                self.assertGreaterEqual(driver.acquisitions, 2 * 4 + result.nfev + 1)

    def test_with_noise(self):
        """Low seeded noise leaves both phases on target."""
        sim = SimConfig(noise_sigma=2e-4, rng_seed=5)
        for algorithm in (Algorithm.TRUST_REGION, Algorithm.NELDER_MEAD, Algorithm.MDS):
            with self.subTest(algorithm=algorithm.value):
                driver = SequentialDosyDriver(sim=sim, algorithm=algorithm)
                delta, gradient, _ = driver.run()
                self.assertAlmostEqual(delta, 0.11)
                self.assertAlmostEqual(gradient, 75.0, delta=2.0)
                self.assertLessEqual(abs(dosy_ratio(gradient, delta) - 0.25), 0.01)
                self.assertEqual(driver.stages, 5)

    def test_probe_ratios_fall(self):
        """Longer delays attenuate the probe more."""
        driver = SequentialDosyDriver(sim=NOISE_FREE)
        driver.find_delta()
        ratios = [f + 0.25 for _, f in driver.probes]
        self.assertTrue(all(b < a for a, b in zip(ratios, ratios[1:])))
        self.assertGreater(ratios[-2], 0.25)
        self.assertLessEqual(ratios[-1], 0.25)

    def test_first_delay_sufficient(self):
        """Phase 1 stops at once when delta_init already attenuates enough."""
        driver = SequentialDosyDriver(DosyPlan(delta_init=0.2), sim=NOISE_FREE)
        self.assertEqual(driver.find_delta(), 0.2)
        self.assertEqual(len(driver.probes), 1)
        self.assertEqual(driver.acquisitions, 2)

    def test_no_diffusion(self):
        """Without diffusion phase 1 runs out of delays."""
        sim = replace(NOISE_FREE, diffusion_d=0.0)
        with self.assertRaises(InsufficientDiffusionWeightingError):
            dosy_sequential(sim=sim)

    def test_logs(self):
        """Each probe and the gradient search write their own log."""
        with tempfile.TemporaryDirectory() as tmp:
            driver = SequentialDosyDriver(sim=NOISE_FREE, out_dir=tmp,
                                          started="2024-01-01T00:00:00")
            driver.run()
            names = sorted(os.listdir(tmp))
            self.assertEqual(names, ["dosy.log", "dosy_aux_1.log", "dosy_aux_2.log",
                                     "dosy_aux_3.log", "dosy_aux_4.log"])
            probe = parse_log(os.path.join(tmp, "dosy_aux_4.log"))
            self.assertEqual(probe.nfev, 1)
            self.assertEqual(probe.rows[0].values, (80.0,))
            seeds = [parse_log(os.path.join(tmp, name)).header["seed"] for name in names]
            self.assertEqual(seeds, ["4", "0", "1", "2", "3"])


class TestSimultaneousDosy(unittest.TestCase):
    """Test the joint gradient and delay search."""

    def test_attenuation_reached(self):
        """The joint search reaches the target ratio."""
        driver = SimultaneousDosyDriver(sim=NOISE_FREE)
        result = driver.run()
        gradient, delta = result.x_best
        self.assertLess(abs(result.f_best - delta), 0.05)
        self.assertLess(abs(dosy_ratio(gradient, delta) - 0.25), 0.05)

    def test_reference_per_evaluation(self):
        """Every evaluation acquires its own reference."""
        driver = SimultaneousDosyDriver(sim=NOISE_FREE, algorithm=Algorithm.NELDER_MEAD)
        result = driver.run()
        self.assertEqual(driver.acquisitions, 2 * result.nfev)

    def test_deterministic(self):
        """Two runs with one seed agree exactly."""
        a = dosy_simultaneous(seed=3)
        b = dosy_simultaneous(seed=3)
        self.assertEqual(list(a.x_best), list(b.x_best))
        self.assertEqual(a.f_best, b.f_best)
        self.assertEqual(a.nfev, b.nfev)


if __name__ == "__main__":
    unittest.main()
