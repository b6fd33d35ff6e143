#!/usr/bin/env python
# -*- encoding=utf8 -*-

import math
import unittest

import numpy as np

from src.walks.coxeter import VerdictStatus
from src.walks.critical import critical_point
from src.walks.model import bundled_model, inventory, simple_walk, tandem
from src.walks.spectral import angle_geometry
from src.walks.walkgroup import (bound_conclusion, build_generators, estimate_group_order, fixed_point_scan,
                                 g_vs_h_report, identity_checks, jacobian_generator, maps_equal, pair_order, phi,
                                 random_points, relation_holds, word_jacobian, word_map)


class TestGenerators(unittest.TestCase):
    model = bundled_model("rational_cosine_3d")
    critical = critical_point(model)

    def setUp(self):
        self.rng = np.random.default_rng(0)

    def test_involutions_preserve_inventory(self):
        for point in random_points(self.critical.x0, 10, self.rng):
            for i in range(3):
                image = phi(self.model, i, point)
                np.testing.assert_allclose(phi(self.model, i, image), point, rtol=1e-12)
                self.assertAlmostEqual(inventory(self.model, image), inventory(self.model, point), places=12)
                for k in range(3):
                    if k != i:
                        self.assertEqual(image[k], point[k])

    def test_critical_point_is_fixed(self):
        for i in range(3):
            np.testing.assert_allclose(phi(self.model, i, self.critical.x0), self.critical.x0, atol=1e-12)

    def test_first_generator_row(self):
        s1 = build_generators(self.model, self.critical).matrix(0)
        np.testing.assert_allclose(s1[0], [-1.0, 0.0, -7.0 / 5.0], atol=1e-10)
        np.testing.assert_allclose(s1[1:], np.eye(3)[1:], atol=1e-14)

    def test_rotation_eigenvalues(self):
        generators = build_generators(self.model, self.critical)
        eigenvalues = np.linalg.eigvals(generators.matrix(0) @ generators.matrix(2))
        eigenvalues = sorted(eigenvalues, key=lambda z: (round(z.real, 6), z.imag))
        root = math.sqrt(21) / 5
        expected = [complex(0.4, -root), complex(0.4, root), complex(1.0, 0.0)]
        for value, target in zip(eigenvalues, expected):
            self.assertAlmostEqual(abs(value - target), 0.0, delta=1e-8)

    def test_pair_order_is_infinite(self):
        order = pair_order(self.critical.delta, 0, 2)
        self.assertEqual(order.status, VerdictStatus.INFINITE)
        self.assertEqual(pair_order(self.critical.delta, 0, 1).m, 2)

    def test_word_convention(self):
        point = np.array([0.7, 1.4, 0.9])
        expected = phi(self.model, 0, phi(self.model, 2, point))
        np.testing.assert_allclose(word_map(self.model, (0, 2), point), expected)
        chained = jacobian_generator(self.model, 0, phi(self.model, 2, point)) @ jacobian_generator(self.model, 2,
                                                                                                   point)
        np.testing.assert_allclose(word_jacobian(self.model, (0, 2), point), chained, atol=1e-12)

    def test_identity_residuals(self):
        geometry = angle_geometry(self.critical.delta)
        generators = build_generators(self.model, self.critical)
        checks = identity_checks(self.model, self.critical, geometry, generators, self.rng)
        self.assertLess(checks.reflection, 1e-8)
        self.assertLess(checks.conjugation, 1e-8)
        self.assertLess(checks.morphism, 1e-8)
        self.assertLess(checks.invariance, 1e-8)


class TestRelations(unittest.TestCase):

    def test_tandem_relations(self):
        model = bundled_model("tandem_2d")
        points = random_points(np.ones(2), 5, np.random.default_rng(0))
        self.assertTrue(relation_holds(model, 0, 1, 3, points))
        self.assertFalse(relation_holds(model, 0, 1, 2, points))

    def test_maps_equal(self):
        model = bundled_model("tandem_2d")
        points = random_points(np.ones(2), 5, np.random.default_rng(0))
        self.assertTrue(maps_equal(model, (0, 1, 0, 1, 0, 1), (), points))
        self.assertFalse(maps_equal(model, (0, 1), (1, 0), points))

    def test_word_search(self):
        rng = np.random.default_rng(0)
        tandem_estimate = estimate_group_order(bundled_model("tandem_2d"), random_points(np.ones(2), 5, rng))
        self.assertTrue(tandem_estimate.complete)
        self.assertEqual(tandem_estimate.elements, 6)
        simple_estimate = estimate_group_order(simple_walk(2), random_points(np.ones(2), 5, rng))
        self.assertEqual(simple_estimate.elements, 4)

    def test_fixed_point_scan(self):
        self.assertEqual(fixed_point_scan(bundled_model("tandem_2d"), 0, 1, threads=1), [])
        with self.assertRaises(ValueError):
            fixed_point_scan(bundled_model("tandem_2d"), 1, 1)

    def test_fixed_points_off_the_orthant(self):
        # with z frozen at -2, phi_1 and phi_2 share fixed points such as (0.29682, 1.143608, -2)
        model = bundled_model("orthogonal_walls_3d")
        witnesses = fixed_point_scan(model, 0, 1, grid=(-2.0,), threads=1)
        self.assertTrue(witnesses)
        for witness in witnesses:
            point = np.array(witness.point)
            self.assertEqual(point[2], -2.0)
            np.testing.assert_allclose(phi(model, 0, point), point, rtol=1e-8)
            np.testing.assert_allclose(phi(model, 1, point), point, rtol=1e-8)
            self.assertGreater(max(abs(m - 1.0) for m in witness.moduli), 1e-6)


class TestGroupComparison(unittest.TestCase):

    def test_tandem_groups_are_isomorphic(self):
        for d in range(2, 7):
            comparison = g_vs_h_report(tandem(d), scan=False, seed=0)
            order = math.factorial(d + 1)
            self.assertTrue(comparison.isomorphic, d)
            self.assertEqual(comparison.h_verdict.order, order)
            self.assertEqual(comparison.im_j_order, order)
            self.assertEqual((comparison.g_lower, comparison.g_upper), (order, order))
            self.assertEqual(comparison.g_status, VerdictStatus.FINITE)

    def test_tandem_with_scan(self):
        comparison = g_vs_h_report(bundled_model("tandem_2d"), seed=0)
        self.assertTrue(comparison.isomorphic)
        self.assertEqual(comparison.witnesses, [])
        self.assertLess(comparison.checks.morphism, 1e-8)

    def test_declared_order(self):
        comparison = g_vs_h_report(simple_walk(2), group_order=4, scan=False, seed=0)
        self.assertTrue(comparison.isomorphic)
        self.assertIn("|G| = 4 < 2^2 N = 8", comparison.conclusion)

    def test_word_search_concludes(self):
        comparison = g_vs_h_report(bundled_model("tandem_2d"), word_bfs=True, scan=False, seed=0)
        self.assertTrue(comparison.estimate.complete)
        self.assertIn("word search closed at 6 elements", comparison.conclusion)

    def test_orthogonal_walls(self):
        comparison = g_vs_h_report(bundled_model("orthogonal_walls_3d"), seed=0)
        self.assertEqual(comparison.h_verdict.order, 8)
        self.assertTrue(any(r.holds_in_g is False for r in comparison.relations))
        self.assertEqual(comparison.g_status, VerdictStatus.INFINITE)
        self.assertIs(comparison.isomorphic, False)
        self.assertTrue(comparison.witnesses)
        self.assertTrue(any(abs(m - 1.0) > 1e-6 for w in comparison.witnesses for m in w.moduli))
        self.assertIn("H is finite while G is infinite", comparison.notes)

    def test_rational_cosine_group_is_infinite(self):
        comparison = g_vs_h_report(bundled_model("rational_cosine_3d"), scan=False, seed=0)
        self.assertEqual(comparison.g_status, VerdictStatus.INFINITE)
        self.assertTrue(comparison.h_verdict.is_infinite)
        self.assertIsNone(comparison.isomorphic)
        self.assertIn("S_1 S_3 has infinite order", comparison.conclusion)

    def test_infinite_reflection_group(self):
        comparison = g_vs_h_report(bundled_model("infinite_reflection_4d"), scan=False, seed=0)
        self.assertEqual(comparison.g_status, VerdictStatus.INFINITE)
        self.assertIsNone(comparison.isomorphic)
        document = comparison.to_dict()
        self.assertEqual(document["g"]["status"], VerdictStatus.INFINITE)

    def test_bound_conclusion(self):
        self.assertEqual(bound_conclusion(24, 6), "|K_d| = 24 >= |G| >= |H| = 6")
        text = bound_conclusion(24, None)
        self.assertEqual(text, "|K_d| = 24 >= |G|, |H| unknown")
        self.assertNotIn("None", text)
