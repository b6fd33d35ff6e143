#!/usr/bin/env python
# -*- encoding=utf8 -*-

import contextlib
import io
import os
import tempfile
import unittest

from src.cmd import EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from src.main import main
from src.service.analysis import AnalysisParams, AnalysisService
from src.service.catalog import CatalogParams, CatalogService
from src.service.counting import CountingService, CountParams
from src.utils.config import report_schema_version
from src.utils.helper import read_report
from src.utils.path import get_model_file
from src.utils.response import ResponseStatus


def run_main(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


class TestServices(unittest.TestCase):

    def test_analysis_report(self):
        service = AnalysisService.from_file(get_model_file("tandem_2d"))
        response = service.analyze(AnalysisParams(model_path=get_model_file("tandem_2d"), seed=0))
        self.assertEqual(response.status, ResponseStatus.SUCCESS)
        report = response.data
        self.assertEqual(report["schema_version"], report_schema_version)
        self.assertEqual(report["errors"], {})
        self.assertTrue(report["groups"]["isomorphic"])
        self.assertEqual(report["nodal"]["lambda1"], 9)
        self.assertTrue(report["spectral"]["isometry_passed"])

    def test_failing_section_is_reported(self):
        # no step moves the second coordinate down, so there is no interior critical point
        document = "dim: 2\nsteps: [[1, 0], [-1, 0], [0, 1]]\n"
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "one_sided.yaml")
            with open(path, "w") as f:
                f.write(document)
            response = AnalysisService.from_file(path).analyze(AnalysisParams(model_path=path))
        self.assertEqual(response.status, ResponseStatus.FAILED)
        self.assertIn("critical", response.data["errors"])
        self.assertEqual(response.data["model"]["dim"], 2)

    def test_counting_service(self):
        path = get_model_file("simple_walk_2d")
        response = CountingService.from_file(path).count(
            CountParams(model_path=path, start=[0, 0], end=[0, 0], n_max=60, exact=False, fit=True))
        self.assertTrue(response.ok)
        self.assertEqual(response.data["table"]["period"], 2)
        self.assertAlmostEqual(response.data["fit"]["alpha_hat"], 3.0, delta=0.1)

    def test_counting_failure(self):
        path = get_model_file("simple_walk_2d")
        response = CountingService.from_file(path).count(
            CountParams(model_path=path, start=[0, 0], end=[0, 0], n_max=10, fit=True))
        self.assertEqual(response.status, ResponseStatus.FAILED)
        self.assertIn("ValueError", response.message)

    def test_catalog_service(self):
        self.assertEqual(len(CatalogService().table(CatalogParams(dim=4)).data["rows"]), 11)
        response = CatalogService().table(CatalogParams(dim=5))
        self.assertFalse(response.ok)
        self.assertIn("d <= 4", response.message)


class TestCommandLine(unittest.TestCase):

    def test_count_table(self):
        code, out, _ = run_main("count", get_model_file("simple_walk_2d"), "--from", "0,0", "--to", "0,0",
                                "--n", "8", "--unweighted")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0], "n,e(n)")
        self.assertEqual([line.split(",")[1] for line in lines[1:]], ["1", "0", "2", "0", "10", "0", "70", "0", "588"])

    def test_count_zero_length(self):
        code, out, _ = run_main("count", get_model_file("tandem_2d"), "--from", "0,0", "--to", "0,0", "--n", "0")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "n,e(n)\n0,1\n")

    def test_count_json(self):
        code, out, _ = run_main("count", get_model_file("tandem_2d"), "--from", "0,0", "--to", "0,0", "--n", "6",
                                "--json")
        self.assertEqual(code, EXIT_OK)
        document = read_report(out)
        self.assertEqual(document["table"]["values"], ["1", "0", "0", "1/27", "0", "0", "5/729"])

    def test_count_usage_errors(self):
        model = get_model_file("simple_walk_2d")
        code, _, err = run_main("count", model, "--from", "0,0,0", "--to", "0,0", "--n", "4")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("dimension 2", err)
        code, _, _ = run_main("count", model, "--from", "0,-1", "--to", "0,0", "--n", "4")
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = run_main("count", model, "--from", "0,0", "--to", "0,0", "--n", "-2")
        self.assertEqual(code, EXIT_USAGE)
        code, _, _ = run_main("count", "no/such/model.yaml", "--from", "0,0", "--to", "0,0", "--n", "4")
        self.assertEqual(code, EXIT_USAGE)

    def test_count_failure(self):
        code, _, _ = run_main("count", get_model_file("simple_walk_2d"), "--from", "0,0", "--to", "0,0", "--n", "8",
                              "--fit")
        self.assertEqual(code, EXIT_FAILURE)

    def test_catalog(self):
        code, out, _ = run_main("catalog", "--dim", "3")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().split("\n")
        self.assertEqual([line.split(",")[-1] for line in lines[1:]], ["12", "(k+1)(k+2)", "42", "90", "240"])
        code, _, err = run_main("catalog", "--dim", "5")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("d <= 4", err)

    def test_analyze_to_file(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "report.json")
            code, _, _ = run_main("analyze", get_model_file("symmetric_group_4d"), "--out", path, "--pretty",
                                  "--no-fixed-point-scan")
            self.assertEqual(code, EXIT_OK)
            with open(path, "r") as f:
                report = read_report(f.read())
        self.assertEqual(report["nodal"]["lambda1"], 120)
        self.assertEqual(report["nodal"]["alpha_exact"], "12")
        self.assertEqual(report["groups"]["h"]["order"], 120)
        self.assertEqual(report["seed"], 0)

    def test_analyze_bad_model(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "bad.yaml")
            with open(path, "w") as f:
                f.write("dim: 2\nsteps:\n  - [1, 0]\n  - [1, 0]\n")
            code, _, err = run_main("analyze", path)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("line 4", err)

    def test_usage(self):
        self.assertEqual(run_main()[0], EXIT_USAGE)
        self.assertEqual(run_main("catalog")[0], EXIT_USAGE)
        self.assertEqual(run_main("--version")[0], EXIT_OK)
