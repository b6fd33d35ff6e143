#!/usr/bin/env python
# -*- encoding=utf8 -*-

import math
import unittest
from fractions import Fraction

from src.utils.config import cfg
from src.walks.counting import (box_bound, brute_force_count, count_excursions, estimate_asymptotics, export_table,
                                integer_weights, richardson, verify_prediction)
from src.walks.errors import MemoryBudgetError
from src.walks.model import bundled_model, simple_walk, tandem


class TestCounting(unittest.TestCase):

    def test_simple_walk_excursions(self):
        table = count_excursions(simple_walk(2), (0, 0), (0, 0), 8, weighted=False)
        self.assertEqual(list(table.values), [1, 0, 2, 0, 10, 0, 70, 0, 588])
        self.assertEqual(table.period, 2)
        weighted = count_excursions(simple_walk(2), (0, 0), (0, 0), 4)
        self.assertEqual(weighted.value(4), Fraction(10, 256))

    def test_matches_brute_force(self):
        cases = [
            (simple_walk(2), (0, 0), (0, 0), 8),
            (simple_walk(2), (1, 0), (0, 2), 7),
            (bundled_model("tandem_2d"), (0, 0), (0, 0), 8),
            (bundled_model("weighted_tandem_2d"), (2, 1), (0, 1), 8),
            (bundled_model("rational_cosine_3d"), (1, 1, 1), (1, 0, 1), 5),
            (bundled_model("symmetric_group_4d"), (0, 0, 0, 0), (0, 0, 0, 0), 5),
        ]
        for model, start, end, n_max in cases:
            for weighted in (True, False):
                table = count_excursions(model, start, end, n_max, weighted=weighted)
                for n in range(n_max + 1):
                    self.assertEqual(table.value(n), brute_force_count(model, start, end, n, weighted=weighted),
                                     f"{start}->{end}, n={n}, weighted={weighted}")

    def test_period(self):
        tandem_table = count_excursions(bundled_model("tandem_2d"), (0, 0), (0, 0), 30)
        self.assertEqual(tandem_table.period, 3)
        odd = count_excursions(simple_walk(2), (0, 0), (1, 0), 9, weighted=False)
        self.assertEqual(odd.period, 1)
        self.assertTrue(all(n % 2 == 1 for n in odd.nonzero))
        empty = count_excursions(simple_walk(2), (0, 0), (5, 5), 4)
        self.assertEqual(empty.period, 0)

    def test_float_mirror(self):
        model = bundled_model("weighted_tandem_2d")
        exact = count_excursions(model, (0, 0), (0, 0), 60)
        mirror = count_excursions(model, (0, 0), (0, 0), 60, exact=False)
        self.assertIsNone(mirror.values)
        for a, b in zip(exact.log_values, mirror.log_values):
            if a == -math.inf:
                self.assertEqual(b, -math.inf)
            else:
                self.assertAlmostEqual(a, b, delta=1e-9 * max(1.0, abs(a)))
        with self.assertRaises(ValueError):
            mirror.value(3)

    def test_threads_agree(self):
        model = simple_walk(2)
        single = count_excursions(model, (0, 0), (0, 0), 24, threads=1)
        pooled = count_excursions(model, (0, 0), (0, 0), 24, threads=4)
        self.assertEqual(single.values, pooled.values)

    def test_edge_cases(self):
        self.assertEqual(count_excursions(simple_walk(2), (1, 1), (1, 1), 0).values, (1,))
        self.assertEqual(count_excursions(simple_walk(2), (1, 1), (0, 1), 0).values, (0,))
        with self.assertRaises(ValueError):
            count_excursions(simple_walk(2), (0, 0), (0, 0), -1)
        with self.assertRaises(ValueError):
            count_excursions(simple_walk(2), (0, -1), (0, 0), 4)
        with self.assertRaises(ValueError):
            count_excursions(simple_walk(2), (0, 0, 0), (0, 0), 4)

    def test_memory_budget(self):
        budget = cfg.memory_budget
        cfg.memory_budget = 1024
        try:
            with self.assertRaises(MemoryBudgetError):
                count_excursions(simple_walk(3), (0, 0, 0), (0, 0, 0), 100)
        finally:
            cfg.memory_budget = budget

    def test_helpers(self):
        self.assertEqual(integer_weights(bundled_model("weighted_tandem_2d"), True), ((2, 1, 1), 4))
        self.assertEqual(integer_weights(simple_walk(2), False), ((1, 1, 1, 1), 1))
        self.assertEqual(box_bound(simple_walk(2), (0, 0), (0, 0), 8), (4, 4))
        self.assertEqual(box_bound(simple_walk(2), (6, 0), (0, 0), 2), (6, 1))

    def test_export(self):
        table = count_excursions(simple_walk(2), (0, 0), (0, 0), 4, weighted=False)
        self.assertEqual(export_table(table), "n,e(n)\n0,1\n1,0\n2,2\n3,0\n4,10\n")
        mirror = count_excursions(simple_walk(2), (0, 0), (0, 0), 2, exact=False)
        lines = export_table(mirror, delimiter="\t").strip().split("\n")
        self.assertEqual(lines[0], "n\tlog e(n)")
        self.assertEqual(lines[2], "1\t-inf")


class TestFit(unittest.TestCase):

    def test_richardson_removes_inverse_powers(self):
        ns = list(range(10, 20))
        values = [2.0 + 3.0 / n - 5.0 / n ** 2 for n in ns]
        extrapolated = richardson(ns, values, 2)
        for value in extrapolated:
            self.assertAlmostEqual(value, 2.0, places=10)

    def test_simple_walk_exponent(self):
        table = count_excursions(simple_walk(2), (0, 0), (0, 0), 200, exact=False)
        fit = estimate_asymptotics(table, rho=1.0)
        self.assertAlmostEqual(fit.alpha_hat, 3.0, delta=0.05)
        self.assertAlmostEqual(fit.rho_hat, 1.0, delta=1e-3)
        self.assertEqual(fit.period, 2)

    def test_tandem_exponent(self):
        table = count_excursions(bundled_model("tandem_2d"), (0, 0), (0, 0), 300, exact=False)
        fit = estimate_asymptotics(table, rho=1.0)
        self.assertAlmostEqual(fit.alpha_hat, 4.0, delta=0.05)
        self.assertEqual(fit.period, 3)

    def test_three_dimensional_exponent(self):
        table = count_excursions(simple_walk(3), (0, 0, 0), (0, 0, 0), 150, exact=False)
        fit = estimate_asymptotics(table, rho=1.0)
        self.assertAlmostEqual(fit.alpha_hat, 4.5, delta=0.1)

    def test_half_line_exponent(self):
        table = count_excursions(simple_walk(1), (0,), (0,), 400, exact=False)
        fit = estimate_asymptotics(table)
        self.assertAlmostEqual(fit.alpha_hat, 1.5, delta=0.05)
        self.assertAlmostEqual(fit.rho_hat, 1.0, delta=1e-3)

    def test_endpoints_in_another_residue_class(self):
        # tandem walks from (0, 0) to (1, 0) have lengths 2, 5, 8, ...: gcd 1 but spacing 3
        table = count_excursions(bundled_model("tandem_2d"), (0, 0), (1, 0), 150, weighted=False, exact=False)
        self.assertEqual(table.period, 1)
        self.assertEqual(table.spacing, 3)
        self.assertEqual(table.nonzero[:3], [2, 5, 8])
        fit = estimate_asymptotics(table)
        self.assertEqual(fit.period, 3)
        self.assertAlmostEqual(fit.rho_hat, 3.0, delta=0.01)
        self.assertTrue(math.isfinite(fit.alpha_hat))
        self.assertAlmostEqual(fit.alpha_hat, 4.0, delta=0.1)

    def test_too_few_terms(self):
        table = count_excursions(simple_walk(2), (0, 0), (0, 0), 20)
        with self.assertRaises(ValueError):
            estimate_asymptotics(table)


class TestVerification(unittest.TestCase):

    def test_tandem_prediction(self):
        report = verify_prediction(bundled_model("tandem_2d"), n_max=300)
        self.assertEqual(report.status, "pass")
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.predicted_alpha, 4.0, places=12)
        self.assertEqual(report.to_dict()["period"], 3)

    def test_drifted_model(self):
        model = bundled_model("weighted_tandem_2d")
        report = verify_prediction(model, n_max=300)
        self.assertLess(report.rho_error, 1e-3)
        self.assertTrue(report.nodal.is_nodal)

    def test_non_nodal_model(self):
        report = verify_prediction(bundled_model("third_cosine_3d"), n_max=90)
        self.assertIsNone(report.passed)
        self.assertIsNone(report.predicted_alpha)
        self.assertTrue(report.status.startswith("non-nodal"))

    def test_other_start(self):
        report = verify_prediction(tandem(2), start=(1, 1), n_max=300)
        self.assertEqual(report.table.start, (1, 1))
        self.assertTrue(report.passed)
