"""
Test suite for the command line interface.
"""

import io
import json
import unittest
import sys
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import poise_cli
from routines import list_routines

STARTED = "2024-01-01T00:00:00"


class TestCli(unittest.TestCase):
    """Test commands and exit codes."""

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = poise_cli.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def write_routine(self, name, **changes):
        data = {"name": name, "pars": ["p1"], "lb": [40.0], "ub": [56.0], "init": [48.0],
                "tol": [0.2], "cf": "minabsint", "au": "poise_1d"}
        data.update(changes)
        with open(os.path.join(self.tmp, f"{name}.json"), "w", encoding="utf-8") as f:
            json.dump(data, f)

    def test_run(self):
        """run prints the optimum and writes log, summary and trajectory."""
        out_dir = os.path.join(self.tmp, "out")
        code, out, _ = self.main("run", "p1cal", "--seed", "1", "--out", out_dir,
                                 "--started", STARTED)
        self.assertEqual(code, 0)
        self.assertIn("Optimum for p1cal", out)
        self.assertIn("p1 = 48.", out)
        for name in ("poise.log", "p1cal.summary.json", "p1cal.trajectory.csv"):
            self.assertTrue(os.path.exists(os.path.join(out_dir, name)), name)

    def test_grid_run(self):
        """A grid run reports a sweep file."""
        out_dir = os.path.join(self.tmp, "grid")
        code, out, _ = self.main("run", "dosy_2p", "-a", "grid", "--grid-steps", "2,3",
                                 "--out", out_dir)
        self.assertEqual(code, 0)
        self.assertIn("evaluations = 6", out)
        self.assertIn("dosy_2p.sweep.csv", out)

    def test_parse_log(self):
        """parse-log summarizes a log written by run."""
        out_dir = os.path.join(self.tmp, "out")
        self.main("run", "p1cal", "--max-fev", "4", "-a", "nm", "--out", out_dir,
                  "--started", STARTED)
        code, out, _ = self.main("parse-log", os.path.join(out_dir, "poise.log"))
        self.assertEqual(code, 0)
        self.assertIn("routine: p1cal", out)
        self.assertIn(f"started: {STARTED}", out)
        self.assertIn("evaluations: 4", out)
        self.assertIn("(max_fev)", out)

    def test_dosy(self):
        """The simultaneous search reports two acquisitions per evaluation."""
        code, out, _ = self.main("dosy", "--mode", "simultaneous", "--max-fev", "5",
                                 "--out", os.path.join(self.tmp, "dosy"))
        self.assertEqual(code, 0)
        self.assertIn("5 evaluations", out)
        self.assertIn("Acquisitions: 10", out)

    def test_routines_list(self):
        """routines list prints every stored routine."""
        code, out, _ = self.main("routines", "list")
        self.assertEqual(code, 0)
        names = [line for line in out.splitlines() if not line.startswith("[")]
        self.assertEqual(names, list_routines())

    def test_routines_validate(self):
        """routines validate fails when any routine is invalid."""
        self.write_routine("good")
        self.write_routine("bad", init=[60.0])
        self.write_routine("badau", au="poise_3d")
        code, out, _ = self.main("routines", "validate", "--routines-dir", self.tmp)
        self.assertEqual(code, 1)
        self.assertIn("FAIL bad", out)
        self.assertIn("FAIL badau", out)
        self.assertIn("ok   good", out)

    def test_library_errors(self):
        """Invalid routines and unknown cost functions exit with code 2."""
        self.write_routine("broken", tol=[-1.0])
        self.write_routine("nocost", cf="no_such_cost")
        self.write_routine("huge", ub=[10 ** 400])
        for routine in ("broken", "nocost", "huge"):
            with self.subTest(routine=routine):
                code, _, err = self.main("run", routine, "--routines-dir", self.tmp,
                                         "--out", os.path.join(self.tmp, "out"))
                self.assertEqual(code, 2)
                self.assertTrue(err.startswith("error: "))

    def test_other_errors(self):
        """Missing files exit with code 1."""
        code, _, err = self.main("run", "p1cal", "--routines-dir", self.tmp)
        self.assertEqual(code, 1)
        self.assertIn("FileNotFoundError", err)
        code, _, _ = self.main("parse-log", os.path.join(self.tmp, "absent.log"))
        self.assertEqual(code, 1)

    def test_bad_arguments(self):
        """argparse rejects unknown algorithms."""
        with self.assertRaises(SystemExit) as cm:
            self.main("run", "p1cal", "--algorithm", "anneal")
        self.assertEqual(cm.exception.code, 2)


if __name__ == "__main__":
    unittest.main()
