"""
Test suite for routine parsing, validation and storage.
"""

import json
import unittest
import sys
import os
import tempfile

import numpy as np

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from routines import (
    FIELDS,
    Routine,
    RoutineValidator,
    list_routines,
    load_routine,
    parse_routine,
    routine_path,
    save_routine,
    validate_routines,
    write_routine,
)
from utils.errors import RoutineValidationError

P1CAL = {"name": "p1cal", "pars": ["p1"], "lb": [40.0], "ub": [56.0], "init": [48.0],
         "tol": [0.2], "cf": "minabsint", "au": "poise_1d"}

SHIPPED = ["1dnoe", "asaphsqc", "dosy", "dosy_2p", "dosy_aux", "epsi", "ernst",
           "invrec", "p1cal", "psyche1", "psyche2", "psyche3", "psyche4",
           "solvsupp1", "solvsupp2", "solvsupp3", "solvsupp4"]


def with_changes(**changes):
    data = dict(P1CAL)
    data.update(changes)
    return json.dumps(data)


class TestParseRoutine(unittest.TestCase):
    """Test parsing routine JSON."""

    def test_valid_p1cal(self):
        """The pulse-calibration routine parses into a Routine."""
        routine = parse_routine(json.dumps(P1CAL))
        self.assertEqual(routine.name, "p1cal")
        self.assertEqual(routine.pars, ("p1",))
        self.assertEqual(routine.lb, (40.0,))
        self.assertEqual(routine.cf, "minabsint")
        self.assertEqual(routine.dim, 1)

    def test_valid_dosy(self):
        """The DOSY routine parses; integers become reals."""
        text = ('{"name":"dosy","pars":["gpz1"],"lb":[20],"ub":[80],"init":[50],'
                '"tol":[2],"cf":"dosy","au":"poise_1d"}')
        routine = parse_routine(text)
        self.assertEqual(routine.init, (50.0,))
        self.assertIsInstance(routine.tol[0], float)

    def test_invalid_routines_name_field(self):
        """Each kind of defect names the offending field."""
        cases = [
            (with_changes(init=[39.0]), "init"),
            (with_changes(lb=[56.0]), "lb"),
            (with_changes(tol=[0.0]), "tol"),
            (with_changes(tol=[-0.2]), "tol"),
            (with_changes(tol=[16.0]), "tol"),
            (with_changes(ub=[56.0, 60.0]), "ub"),
            (with_changes(pars=[]), "pars"),
            (with_changes(name=""), "name"),
            (with_changes(cf=""), "cf"),
            (with_changes(lb=["forty"]), "lb"),
            (with_changes(ub=[10 ** 400]), "ub"),
            (with_changes(au="poise_3d"), "au"),
            (with_changes(extra=1), "extra"),
            (json.dumps({k: v for k, v in P1CAL.items() if k != "au"}), "au"),
        ]
        for text, field in cases:
            with self.subTest(field=field, text=text):
                with self.assertRaises(RoutineValidationError) as cm:
                    parse_routine(text)
                self.assertEqual(cm.exception.field, field)

    def test_not_json(self):
        """Malformed JSON and non-objects are validation errors."""
        for text in ("{", "[1, 2]", '"p1cal"'):
            with self.subTest(text=text):
                with self.assertRaises(RoutineValidationError):
                    parse_routine(text)

    def test_empty_au_allowed(self):
        """An empty backend name selects the default dispatch."""
        self.assertEqual(parse_routine(with_changes(au="")).au, "")

    def test_validator_collects_all_errors(self):
        """The validator reports every problem in one pass."""
        data = dict(P1CAL, init=[39.0], tol=[-1.0])
        is_valid, errors, _ = RoutineValidator(data).validate_all()
        self.assertFalse(is_valid)
        self.assertEqual({field for field, _ in errors}, {"init", "tol"})

    def test_wide_tolerance_warns(self):
        """A tolerance over a quarter of the range is valid but warned about."""
        is_valid, errors, warnings = RoutineValidator(dict(P1CAL, tol=[5.0])).validate_all()
        self.assertTrue(is_valid)
        self.assertEqual(errors, [])
        self.assertEqual(len(warnings), 1)

    def test_direct_construction_validates(self):
        """Building a Routine directly runs the same checks."""
        with self.assertRaises(RoutineValidationError):
            Routine("p1cal", ["p1"], [40.0], [56.0], [60.0], [0.2], "minabsint")


class TestWriteRoutine(unittest.TestCase):
    """Test rendering routines back to JSON."""

    def test_round_trip_p1cal(self):
        """parse(write(r)) reproduces r."""
        routine = parse_routine(json.dumps(P1CAL))
        self.assertEqual(parse_routine(write_routine(routine)), routine)

    def test_round_trip_small_tolerance(self):
        """A 1e-4 tolerance survives exactly."""
        routine = load_routine("epsi")
        text = write_routine(routine)
        self.assertIn("0.0001", text)
        self.assertEqual(parse_routine(text).tol, (1e-4,))

    def test_round_trip_solvsupp4(self):
        """The four-parameter presaturation routine round-trips."""
        routine = load_routine("solvsupp4")
        self.assertEqual(routine.dim, 4)
        self.assertEqual(parse_routine(write_routine(routine)), routine)

    def test_round_trip_random(self):
        """Random valid routines of dimension 1-4 round-trip field for field."""
        rng = np.random.default_rng(5)
        for i in range(500):
            n = int(rng.integers(1, 5))
            lb = rng.uniform(-1e4, 1e4, n)
            ub = lb + rng.uniform(1e-6, 1e4, n)
            init = lb + rng.uniform(0.0, 1.0, n) * (ub - lb)
            tol = (ub - lb) * rng.uniform(1e-6, 0.99, n)
            routine = Routine(f"r{i}", [f"par{j}" for j in range(n)], lb, ub,
                              np.clip(init, lb, ub), tol, "minabsint", "")
            with self.subTest(routine=i):
                self.assertEqual(parse_routine(write_routine(routine)), routine)

    def test_field_order(self):
        """Written files list exactly the schema fields, in schema order."""
        data = json.loads(write_routine(parse_routine(json.dumps(P1CAL))))
        self.assertEqual(tuple(data), FIELDS)


class TestRoutineStore(unittest.TestCase):
    """Test routine files on disk."""

    def test_shipped_routines_parse(self):
        """Every shipped routine loads without error."""
        self.assertEqual(list_routines(), SHIPPED)
        for name in SHIPPED:
            with self.subTest(name=name):
                self.assertEqual(load_routine(name).name, name)

    def test_validate_routines(self):
        """validate_routines reports every shipped routine as valid."""
        report = validate_routines()
        self.assertEqual([name for name, _, _ in report], SHIPPED)
        self.assertTrue(all(ok for _, ok, _ in report))

    def test_save_and_load(self):
        """save_routine writes <name>.json, which load_routine reads back."""
        routine = parse_routine(json.dumps(P1CAL))
        with tempfile.TemporaryDirectory() as tmp:
            path = save_routine(routine, os.path.join(tmp, "routines"))
            self.assertEqual(path, routine_path("p1cal", os.path.join(tmp, "routines")))
            self.assertEqual(load_routine("p1cal", os.path.join(tmp, "routines")), routine)

    def test_name_must_match_stem(self):
        """A file whose name field differs from its stem is rejected."""
        with tempfile.TemporaryDirectory() as tmp:
            with open(os.path.join(tmp, "other.json"), "w", encoding="utf-8") as f:
                f.write(json.dumps(P1CAL))
            with self.assertRaises(RoutineValidationError):
                load_routine("other", tmp)
            report = validate_routines(tmp)
            self.assertEqual(report[0][:2], ("other", False))

    def test_missing_routine(self):
        """Loading an absent routine raises FileNotFoundError."""
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(FileNotFoundError):
                load_routine("p1cal", tmp)
            self.assertEqual(list_routines(os.path.join(tmp, "absent")), [])

    def test_problem_from_routine(self):
        """A routine converts to a ScaledProblem with its bounds and tolerances."""
        routine = load_routine("dosy_2p")
        problem = routine.to_problem(lambda x: 0.0)
        np.testing.assert_array_equal(problem.lb, [20.0, 0.05])
        np.testing.assert_allclose(problem.scaled_tol, [2.0 / 60.0, 0.01 / 0.45])

    def test_with_init(self):
        """with_init changes only the start point and still validates."""
        routine = load_routine("p1cal")
        self.assertEqual(routine.with_init([43.0]).init, (43.0,))
        self.assertEqual(routine.with_init([43.0]).lb, routine.lb)
        with self.assertRaises(RoutineValidationError):
            routine.with_init([30.0])


if __name__ == "__main__":
    unittest.main()
