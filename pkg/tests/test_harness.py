#!/usr/bin/env python3
"""
Test cases for the experiment pipeline, its reports and the isolation
estimate.
"""

import os
import shutil
import sys
import tempfile
import unittest
from fractions import Fraction
from unittest.mock import patch

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from harness import (
    REPORT_COLUMNS,
    PipelineConfig,
    PipelineReport,
    TrialRecord,
    emit_report,
    estimate_isolated_volume,
    load_report,
    retention_quantiles,
    run_pipeline,
    run_trial,
)
from models.errors import ArgumentError, ConfigError, SamplingError
from tests.base import ExpanderTestCase, barbell, complete_graph, one_vertex_torus, random_corpus


class TestPipelineConfig(unittest.TestCase):
    def test_defaults(self):
        cfg = PipelineConfig(n=3)
        self.assertEqual(cfg.eps, Fraction(1, 8))
        self.assertEqual(cfg.grid(), [Fraction(1, 4), Fraction(1, 8), Fraction(1, 16), Fraction(1, 32)])

    def test_grid_is_cut_at_the_cap(self):
        # eps = 1/5 allows kappa_0 up to 1/5
        cfg = PipelineConfig(n=3, eps="1/5")
        self.assertEqual(cfg.grid(), [Fraction(1, 8), Fraction(1, 16), Fraction(1, 32)])
        self.assertEqual(PipelineConfig(n=3, kappa="1/16").grid(), [Fraction(1, 16)])

    def test_invalid_configs(self):
        invalid = [
            dict(n=0),
            dict(n=3, theta="1/10", genus=1),
            dict(n=3, eps="1/2"),
            dict(n=3, kappa="1/2"),
            dict(n=3, strategy="psychic"),
            dict(n=3, trials=0),
            dict(n=3, format="xml"),
            dict(n=2, genus=2),
            dict(n=3, eps=0.125),
            dict(n=3, eps="3/8", kappa_grid=(Fraction(1, 4),)),
            dict(n=3, model="flips"),
            dict(n=3, genus=1, model="shuffle"),
        ]
        for kwargs in invalid:
            with self.subTest(**{k: str(v) for k, v in kwargs.items()}):
                with self.assertRaises(ConfigError):
                    PipelineConfig(**kwargs)

    def test_trial_seeds(self):
        cfg = PipelineConfig(n=3, trials=4, seed=9)
        seeds = cfg.trial_seeds()
        self.assertEqual(seeds, PipelineConfig(n=3, trials=4, seed=9).trial_seeds())
        self.assertEqual(len(set(seeds)), 4)
        self.assertNotEqual(seeds, PipelineConfig(n=3, trials=4, seed=10).trial_seeds())

    def test_to_dict_writes_rationals(self):
        data = PipelineConfig(n=3, theta="1/10").to_dict()
        self.assertEqual(data["theta"], "1/10")
        self.assertEqual(data["eps"], "1/8")
        self.assertEqual(data["kappa_grid"], ["1/4", "1/8", "1/16", "1/32"])


class TestRunPipeline(unittest.TestCase):
    def test_tiny_triangulations(self):
        """Duals of at most ten triangles are already expanders: nothing is peeled"""
        for n in (1, 3, 5):
            cfg = PipelineConfig(n=n, trials=2, strategy="exact", seed=n)
            report = run_pipeline(cfg)
            self.assertEqual(len(report.records), 2 * len(cfg.grid()))
            for record in report.records:
                with self.subTest(n=n, trial=record.trial, kappa0=record.kappa0):
                    self.assertIsNone(record.error)
                    self.assertEqual(record.kappa, record.kappa0 ** 2)
                    self.assertEqual(record.kappa_eps, Fraction(7, 8) * record.kappa)
                    self.assertEqual(record.certified_kappa, record.kappa_eps / 24)
                    self.assertEqual(record.tau, 0)
                    self.assertEqual(record.dual_edges_retained, 3 * n)
                    self.assertEqual(record.primal_edges_retained, 3 * n)
                    self.assertEqual(record.retention, 1)
                    self.assertEqual(record.total_volume, 6 * n)
                    self.assertTrue(record.peel_exact)
                    self.assertTrue(record.isolation_exact)
                    self.assertTrue(record.transfer_verified)
                    self.assertTrue(record.primal_induced)
                    self.assertTrue(record.lemma_inclusion)
                    self.assertEqual(record.sampler, "gluing")

    def test_flips_model_reaches_low_genus(self):
        """Uniform gluings of 80 triangles sit near genus 20; theta = 1/10 asks for 4"""
        cfg = PipelineConfig(n=40, theta="1/10", model="flips", strategy="sweep", kappa="1/4", seed=3)
        records = run_pipeline(cfg).records
        self.assertEqual(len(records), 1)
        record = records[0]
        self.assertIsNone(record.error)
        self.assertEqual(record.sampler, "flips")
        self.assertEqual(record.genus, 4)
        self.assertEqual(record.total_volume, 240)
        self.assertFalse(record.isolation_exact)
        self.assertIsNone(record.lemma_inclusion)
        self.assertTrue(0 <= record.retention <= 1)

    def test_same_seed_same_report(self):
        cfg = PipelineConfig(n=4, trials=2, seed=21, kappa="1/4")
        self.assertEqual(run_pipeline(cfg).records, run_pipeline(cfg).records)

    def test_sampling_errors_fill_every_row(self):
        cfg = PipelineConfig(n=3, genus=1, trials=1)
        with patch("harness.pipeline.sample_triangulation", side_effect=SamplingError("out of attempts")):
            records = run_trial((cfg, 0, 17))
        self.assertEqual([r.kappa0 for r in records], cfg.grid())
        for record in records:
            self.assertTrue(record.error.startswith("SamplingError"))
            self.assertIsNone(record.retention)

    def test_square_faces_are_rejected(self):
        cfg = PipelineConfig(n=3, trials=1)
        with patch("harness.pipeline.sample_triangulation", return_value=one_vertex_torus()):
            records = run_trial((cfg, 0, 17))
        self.assertEqual(len(records), len(cfg.grid()))
        for record in records:
            self.assertTrue(record.error.startswith("MapValidationError"))
            self.assertEqual(record.sampler, "gluing")


class TestReport(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.report = PipelineReport(
            config={"n": 3},
            records=[
                TrialRecord(trial=0, seed=1, n=3, genus=1, kappa0=Fraction(1, 4), retention=Fraction(2, 3),
                            transfer_verified=True, tau=1, sampler="flips", lemma_inclusion=True),
                TrialRecord(trial=1, seed=2, n=3, kappa0=Fraction(1, 4), error="SamplingError: none"),
            ],
        )

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_json_and_csv_read_back(self):
        for format in ("json", "csv"):
            with self.subTest(format=format):
                path = emit_report(self.report, os.path.join(self.temp_dir, f"report.{format}"), format)
                self.assertEqual(load_report(path).records, self.report.records)

    def test_csv_header(self):
        path = emit_report(PipelineReport(), os.path.join(self.temp_dir, "empty.csv"), "csv")
        with open(path) as f:
            self.assertEqual(f.read().strip(), ",".join(REPORT_COLUMNS))

    def test_unknown_format(self):
        with self.assertRaises(ArgumentError):
            emit_report(self.report, os.path.join(self.temp_dir, "report.xml"), "xml")

    def test_quantiles_skip_error_rows(self):
        self.assertEqual(self.report.quantiles(), {Fraction(1, 4): {q: Fraction(2, 3) for q in (
            Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))}})
        self.assertEqual(self.report.to_dict()["rows"][0]["retention"], "2/3")

    def test_nearest_rank_quantiles(self):
        values = [Fraction(1), Fraction(1, 4), Fraction(3, 4), Fraction(1, 2)]
        self.assertEqual(
            retention_quantiles(values),
            {
                Fraction(0): Fraction(1, 4),
                Fraction(1, 4): Fraction(1, 4),
                Fraction(1, 2): Fraction(1, 2),
                Fraction(3, 4): Fraction(3, 4),
                Fraction(1): Fraction(1),
            },
        )
        self.assertEqual(retention_quantiles([]), {})


class TestIsolationEstimate(ExpanderTestCase):
    def test_exact_within_cap(self):
        estimate = estimate_isolated_volume(barbell(), Fraction(1, 5), strong=True)
        self.assertTrue(estimate.exact)
        self.assertEqual(estimate.volume, 14)
        self.assertEqual(estimate.fraction(14), 1)

    def test_heuristic_above_cap(self):
        estimate = estimate_isolated_volume(barbell(), Fraction(1, 5), cap=0, seed=0)
        self.assertFalse(estimate.exact)
        self.assertEqual(estimate.volume, 14)
        self.assertTrue(estimate.witnesses)
        self.assertEqual(estimate_isolated_volume(complete_graph(4), Fraction(2, 3), cap=0).volume, 0)

    def test_heuristic_is_a_lower_bound(self):
        for index, graph in enumerate(random_corpus(count=20)):
            for strong in (False, True):
                with self.subTest(graph=index, strong=strong):
                    exact = estimate_isolated_volume(graph, Fraction(1, 2), strong=strong)
                    heuristic = estimate_isolated_volume(graph, Fraction(1, 2), strong=strong, cap=0, seed=3)
                    self.assertTrue(heuristic.union.issubset(exact.union))

    def test_negative_budget(self):
        with self.assertRaises(ArgumentError):
            estimate_isolated_volume(barbell(), Fraction(1, 5), budget=-1)


if __name__ == "__main__":
    unittest.main()
