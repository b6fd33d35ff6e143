#!/usr/bin/env python
# -*- encoding=utf8 -*-

import math
import os
import tempfile
import unittest
from decimal import Decimal
from fractions import Fraction

import numpy as np

from src.utils.helper import ReportWriter, ToleranceSet, read_report, str2bool, to_serializable
from src.utils.response import ResponseStatus, WalkResponse


class TestToleranceSet(unittest.TestCase):

    def test_deduplicates_within_tolerance(self):
        found = ToleranceSet(3, tolerance=1e-8)
        self.assertTrue(found.add([1.0, 2.0, 3.0]))
        self.assertFalse(found.add([1.0 + 1e-10, 2.0, 3.0 - 1e-10]))
        self.assertTrue(found.add([1.0 + 1e-6, 2.0, 3.0]))
        self.assertEqual(len(found), 2)
        self.assertIn(np.array([1.0, 2.0, 3.0]), found)
        self.assertNotIn([0.0, 0.0, 0.0], found)

    def test_rejects_wrong_size(self):
        found = ToleranceSet(2)
        with self.assertRaises(ValueError):
            found.add([1.0, 2.0, 3.0])

    def test_matrices_are_flattened(self):
        found = ToleranceSet(4)
        found.add(np.eye(2))
        self.assertEqual(found.find(np.eye(2)), 0)
        self.assertEqual(found.find(-np.eye(2)), -1)


class TestReport(unittest.TestCase):

    def test_floats_round_trip_bit_exact(self):
        values = [math.pi, 1.0 / 3.0, 2.0 ** -40, 123456.789e100, math.sqrt(70) / 10]
        text = ReportWriter().dumps({"values": values})
        parsed = read_report(text)
        self.assertEqual([float(v) for v in parsed["values"]], values)

    def test_special_values(self):
        data = to_serializable({
            "inf": math.inf,
            "nan": float("nan"),
            "fraction": Fraction(-7, 5),
            "array": np.array([[1.5, 2.0]]),
            "flag": np.bool_(True),
            "count": np.int64(3),
        })
        self.assertIsNone(data["inf"])
        self.assertIsNone(data["nan"])
        self.assertEqual(data["fraction"], "-7/5")
        self.assertEqual(data["array"], [[Decimal("1.5"), Decimal("2")]])
        self.assertIs(data["flag"], True)
        self.assertEqual(data["count"], 3)

    def test_write_to_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "report.json")
            ReportWriter(pretty=True).write({"rho": 0.5, "name": "tandem"}, path)
            with open(path, "r") as f:
                parsed = read_report(f.read())
        self.assertEqual(parsed["name"], "tandem")
        self.assertEqual(float(parsed["rho"]), 0.5)


class TestResponse(unittest.TestCase):

    def test_status(self):
        self.assertTrue(WalkResponse(ResponseStatus.SUCCESS, "done").ok)
        failed = WalkResponse(ResponseStatus.FAILED, "broken", {"section": "groups"})
        self.assertFalse(failed.ok)
        self.assertEqual(failed.to_dict()["data"], {"section": "groups"})

    def test_str2bool(self):
        self.assertTrue(str2bool("Yes"))
        self.assertFalse(str2bool("off"))
