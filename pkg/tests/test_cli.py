#!/usr/bin/env python3
"""
Test cases for the command line interface: outputs and exit codes.
"""

import io
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from cli import main
from expander_config import EXIT_CODES
from harness import load_report
from storage import OracleCache, read_graph, read_json, read_map, write_graph, write_map
from tests.base import barbell, tetrahedron


class TestCLI(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.barbell_path = str(write_graph(barbell(), self.path("barbell.json")))
        self.tetra_path = str(write_map(tetrahedron(), self.path("tetra.json")))

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def path(self, name: str) -> str:
        return os.path.join(self.temp_dir, name)

    def run_cli(self, *argv) -> int:
        with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
            return main(["--no-cache", *argv])

    def test_sample_and_dualize(self):
        map_path = self.path("t.json")
        self.assertEqual(self.run_cli("--seed", "3", "--out", map_path, "sample", "--n", "4"), 0)
        triangulation = read_map(map_path)
        self.assertTrue(triangulation.is_triangulation())
        self.assertEqual(len(triangulation.faces()), 8)

        dual_path = self.path("d.json")
        self.assertEqual(self.run_cli("--out", dual_path, "dualize", map_path, "--graph"), 0)
        dual_graph = read_graph(dual_path)
        self.assertEqual(set(dual_graph.degrees), {3})
        self.assertEqual(dual_graph.vertex_count, 8)

    def test_genus_histogram(self):
        out = self.path("h.json")
        self.assertEqual(self.run_cli("--out", out, "sample", "--n", "1", "--histogram", "50"), 0)
        histogram = read_json(out)["histogram"]
        self.assertEqual(sum(histogram.values()), 50)

    def test_cheeger(self):
        out = self.path("c.json")
        self.assertEqual(self.run_cli("--out", out, "cheeger", self.barbell_path), 0)
        self.assertEqual(read_json(out), {"cheeger": "1/7", "set": [0, 1, 2]})
        self.assertEqual(self.run_cli("--cap", "3", "cheeger", self.barbell_path), EXIT_CODES["capacity"])

    def test_cached_cheeger_respects_the_cap(self):
        cache_dir = self.path("cache")
        with patch("cli.OracleCache", lambda: OracleCache(cache_dir=cache_dir)):
            with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
                self.assertEqual(main(["cheeger", self.barbell_path]), 0)
                self.assertEqual(len(os.listdir(cache_dir)), 1)
                self.assertEqual(main(["--cap", "3", "cheeger", self.barbell_path]), EXIT_CODES["capacity"])
                self.assertEqual(main(["cheeger", self.barbell_path]), 0)

    def test_isolated(self):
        out = self.path("i.json")
        self.assertEqual(self.run_cli("--out", out, "isolated", self.barbell_path, "--kappa", "1/5", "--strong"), 0)
        result = read_json(out)
        self.assertEqual(result["set"], [0, 1, 2, 3, 4, 5])
        self.assertEqual(result["volume"], 14)
        self.assertTrue(result["exact"])

    def test_peel(self):
        out = self.path("trace.json")
        certificates = self.path("certs.json")
        code = self.run_cli(
            "--out", out, "peel", self.barbell_path, "--kappa", "1/4", "--verify", "--emit-certificates", certificates
        )
        self.assertEqual(code, 0)
        self.assertEqual(read_json(out)["final"], [3, 4, 5])
        self.assertEqual(len(read_json(certificates)["certificates"]), 1)

    def test_transfer_from_faces(self):
        out = self.path("transfer.json")
        code = self.run_cli("--out", out, "transfer", self.tetra_path, "--faces", "0,1,2", "--kappa", "1")
        self.assertEqual(code, 0)
        result = read_json(out)
        self.assertEqual(result["claimed_kappa"], "1/24")
        self.assertTrue(result["verified"])
        self.assertFalse(result["is_induced"])

    def test_transfer_from_trace(self):
        trace = self.path("trace.json")
        self.assertEqual(self.run_cli("--out", trace, "peel", self.tetra_path, "--dual", "--kappa", "1/4"), 0)
        out = self.path("transfer.json")
        self.assertEqual(self.run_cli("--out", out, "transfer", self.tetra_path, "--trace", trace), 0)
        result = read_json(out)
        # kappa_eps = 7/8 * 1/4, divided by 8 D with D = 3
        self.assertEqual(result["claimed_kappa"], "7/768")
        self.assertTrue(result["verified"])

    def test_pipeline_csv(self):
        out = self.path("report.csv")
        code = self.run_cli(
            "--format", "csv", "--out", out,
            "pipeline", "--n", "2", "--trials", "2", "--strategy", "exact", "--workers", "1",
        )
        self.assertEqual(code, 0)
        records = load_report(out).records
        self.assertEqual(len(records), 8)
        self.assertTrue(all(r.error is None for r in records))

    def test_config_errors(self):
        self.assertEqual(self.run_cli("peel", self.barbell_path, "--kappa", "1/4", "--eps", "1/2"), 2)
        self.assertEqual(self.run_cli("pipeline", "--n", "2", "--kappa", "1/2"), 2)
        self.assertEqual(self.run_cli("transfer", self.tetra_path), 2)
        self.assertEqual(self.run_cli(), 2)
        self.assertEqual(self.run_cli("peel", self.barbell_path, "--dual", "--kappa", "1/4"), 2)

    def test_invalid_rational(self):
        with self.assertRaises(SystemExit) as ctx:
            self.run_cli("isolated", self.barbell_path, "--kappa", "one/4")
        self.assertEqual(ctx.exception.code, 2)

    def test_sampling_failure(self):
        with patch("sampler.gluing.draw_gluing", return_value=tetrahedron()):
            code = self.run_cli("sample", "--n", "3", "--genus", "2", "--max-attempts", "5")
        self.assertEqual(code, EXIT_CODES["sampling"])


if __name__ == "__main__":
    unittest.main()
