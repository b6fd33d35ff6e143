#!/usr/bin/env python
# -*- encoding=utf8 -*-

import math
import unittest
from fractions import Fraction

import numpy as np

from src.walks.coxeter import (CoxeterDiagram, ExceededCap, FiniteLabel, GroupClosure, NonCrystallographic,
                               VerdictStatus, catalog_entry, classify, diagram_from_angles, dihedral_entry,
                               generate_roots, isomorphic, matrix_group_closure, order_floor_holds, prop_app_test,
                               reconstruct_rational, reflection_group_verdict, reflection_matrix, rotation_order,
                               simple_system)
from src.walks.critical import critical_point
from src.walks.errors import CatalogError
from src.walks.model import bundled_model, dihedral
from src.walks.spectral import AngleGeometry, angle_geometry


def model_geometry(name: str) -> AngleGeometry:
    return angle_geometry(critical_point(bundled_model(name)).delta)


class TestCatalog(unittest.TestCase):

    def test_entries(self):
        self.assertEqual(catalog_entry("A3").order, 24)
        self.assertEqual(catalog_entry("B3").reflection_count, 9)
        self.assertEqual(catalog_entry("D4").order, 192)
        self.assertEqual(catalog_entry("E8").reflection_count, 120)
        self.assertEqual(catalog_entry("H3").order, 120)
        self.assertEqual(catalog_entry("I2(7)").order, 14)
        self.assertEqual(catalog_entry("A1").name, "Z/2Z")
        self.assertEqual(dihedral_entry(3).name, "A2")
        self.assertEqual(dihedral_entry(4).name, "B2")
        with self.assertRaises(CatalogError):
            catalog_entry("Q3")
        with self.assertRaises(CatalogError):
            catalog_entry("D3")

    def test_isomorphic_labelings(self):
        # the chain 1-2-3 labelled 4, 3 against its reversal
        self.assertTrue(isomorphic(3, {(0, 1): 4, (1, 2): 3}, {(1, 2): 4, (0, 1): 3}))
        self.assertFalse(isomorphic(3, {(0, 1): 4, (1, 2): 3}, {(0, 1): 5, (1, 2): 3}))

    def test_classify_from_matrix(self):
        h3 = classify(CoxeterDiagram.from_coxeter_matrix([[1, 5, 2], [5, 1, 3], [2, 3, 1]]))
        self.assertEqual(h3.status, VerdictStatus.FINITE)
        self.assertEqual(h3.order, 120)
        self.assertEqual(h3.reflection_count, 15)
        self.assertEqual(h3.types, ("H3",))

        d4 = classify(CoxeterDiagram.from_coxeter_matrix(
            [[1, 3, 3, 3], [3, 1, 2, 2], [3, 2, 1, 2], [3, 2, 2, 1]]))
        self.assertEqual(d4.types, ("D4",))
        self.assertEqual(d4.order, 192)

        affine = classify(CoxeterDiagram.from_coxeter_matrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]]))
        self.assertEqual(affine.status, VerdictStatus.INFINITE)

        infinite = classify(CoxeterDiagram.from_coxeter_matrix([[1, 0], [0, 1]]))
        self.assertTrue(infinite.is_infinite)

    def test_order_floor(self):
        self.assertTrue(order_floor_holds(8, 3))
        self.assertFalse(order_floor_holds(4, 3))


class TestRoots(unittest.TestCase):

    def test_reflection_counts(self):
        expected = {"A2": 3, "A3": 6, "B3": 9, "H3": 15, "A4": 10, "B4": 16, "D4": 12, "F4": 24, "H4": 60}
        for name, k in expected.items():
            system = generate_roots(simple_system(name))
            self.assertEqual(system.reflection_count, k, name)
            self.assertEqual(len(system.positive_roots()), k, name)

    def test_exact_roots_stay_rational(self):
        system = generate_roots(simple_system("B3"))
        self.assertTrue(system.exact)
        self.assertIn((Fraction(1), Fraction(1), Fraction(0)), system.roots)

    def test_cap(self):
        # a third line in general position makes the planar reflection group infinite
        normals = [[1.0, 0.0], [math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)], [0.3, 0.7]]
        self.assertIsInstance(generate_roots(normals, cap=200), ExceededCap)

    def test_h3_closure(self):
        generators = [reflection_matrix(v) for v in simple_system("H3")]
        closure = matrix_group_closure(generators)
        self.assertIsInstance(closure, GroupClosure)
        self.assertEqual(closure.order, 120)
        self.assertIsInstance(matrix_group_closure(generators, cap=50), ExceededCap)


class TestDiagram(unittest.TestCase):

    def test_tandem_labels(self):
        diagram = diagram_from_angles(model_geometry("tandem_2d"))
        label = diagram.label(0, 1)
        self.assertIsInstance(label, FiniteLabel)
        self.assertEqual(label.m, 3)
        self.assertEqual(diagram.components, ((0, 1),))

    def test_rational_cosine_labels(self):
        diagram = diagram_from_angles(model_geometry("rational_cosine_3d"))
        self.assertIsInstance(diagram.label(0, 2), NonCrystallographic)
        self.assertEqual(diagram.label(0, 1).m, 2)

    def test_rotation_order(self):
        infinite = rotation_order(math.sqrt(70) / 10)
        self.assertEqual(infinite.status, VerdictStatus.INFINITE)
        self.assertIn("2/5", infinite.reason)
        self.assertEqual(rotation_order(-0.5).m, 3)
        self.assertEqual(rotation_order(0.0).m, 2)
        self.assertEqual(rotation_order(math.cos(math.pi / 7)).m, 7)
        exact = rotation_order(-1 / 3, signed_square=Fraction(-1, 9))
        self.assertEqual(exact.status, VerdictStatus.INFINITE)
        self.assertIn("exact", exact.reason)

    def test_reconstruct_rational(self):
        self.assertEqual(reconstruct_rational(0.4), Fraction(2, 5))
        self.assertIsNone(reconstruct_rational(math.sqrt(2)))

    def test_admissible_cosine_criterion(self):
        witness = prop_app_test(critical_point(bundled_model("third_cosine_3d")).delta)
        self.assertIsNotNone(witness)
        self.assertAlmostEqual(witness.cosine, -1 / 3, delta=1e-12)
        # walls 1, 2 are orthogonal to wall 3, so the criterion does not apply
        isolated = np.array([[1.0, 0.3, 0.0], [0.3, 1.0, 0.0], [0.0, 0.0, 1.0]])
        self.assertIsNone(prop_app_test(isolated))
        self.assertIsNone(prop_app_test(np.array([[1.0, -0.5], [-0.5, 1.0]])))


class TestVerdict(unittest.TestCase):

    def test_third_cosine_is_infinite(self):
        _, verdict = reflection_group_verdict(model_geometry("third_cosine_3d"))
        self.assertTrue(verdict.is_infinite)
        self.assertIn("admissible", verdict.witness)

    def test_infinite_reflection_4d(self):
        _, verdict = reflection_group_verdict(model_geometry("infinite_reflection_4d"))
        self.assertTrue(verdict.is_infinite)

    def test_orthogonal_walls(self):
        diagram, verdict = reflection_group_verdict(model_geometry("orthogonal_walls_3d"))
        self.assertTrue(verdict.is_finite)
        self.assertEqual(verdict.order, 8)
        self.assertEqual(len(diagram.components), 3)

    def test_symmetric_group(self):
        _, verdict = reflection_group_verdict(model_geometry("symmetric_group_4d"))
        self.assertEqual(verdict.types, ("A4",))
        self.assertEqual(verdict.order, 120)
        self.assertEqual(verdict.reflection_count, 10)

    def test_non_chamber_angle_falls_back_to_closure(self):
        angle = 2 * math.pi / 5
        geometry = AngleGeometry.from_angles([[0.0, angle], [angle, 0.0]])
        _, verdict = reflection_group_verdict(geometry)
        self.assertTrue(verdict.is_finite)
        self.assertEqual(verdict.order, 10)

    def test_dihedral_models(self):
        for n in (3, 4, 5, 6):
            geometry = angle_geometry(critical_point(dihedral(n)).delta)
            _, verdict = reflection_group_verdict(geometry)
            self.assertTrue(verdict.is_finite, n)
            self.assertEqual(verdict.order, 2 * n, n)
            self.assertEqual(verdict.reflection_count, n, n)
