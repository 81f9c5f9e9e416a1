#!/usr/bin/env python3
"""
Test cases for the triangle-gluing sampler and its genus distribution.
"""

import os
import sys
import unittest
from fractions import Fraction
from math import sqrt
from unittest.mock import patch

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np

from models import CombinatorialMap
from models.errors import ArgumentError, ConfigError, SamplingError
from sampler import (
    GluingConfig,
    base_gluing,
    enumerate_gluings,
    exact_genus_distribution,
    flip_edge,
    flip_triangulation,
    genus_histogram,
    genus_of_triangulation,
    max_genus,
    sample_gluing,
    sample_triangulation,
    subdivide_triangle,
    triangle_faces,
)
from tests.base import FULL_CORPUS, tetrahedron


class TestGluing(unittest.TestCase):
    def test_triangle_faces(self):
        self.assertEqual(triangle_faces(1), [1, 2, 0, 4, 5, 3])

    def test_sampled_triangulation(self):
        for n in (1, 2, 5, 12):
            with self.subTest(n=n):
                triangulation = sample_triangulation(GluingConfig(n=n, seed=n))
                summary = triangulation.validate()
                self.assertTrue(triangulation.is_triangulation())
                self.assertEqual(summary.edges, 3 * n)
                self.assertEqual(summary.faces, 2 * n)
                self.assertEqual(summary.vertices, n + 2 - 2 * summary.genus)
                self.assertEqual(genus_of_triangulation(triangulation), summary.genus)
                self.assertLessEqual(summary.genus, max_genus(n))

    def test_map_invariants_across_sizes(self):
        count = 10000 if FULL_CORPUS else 150
        for index in range(count):
            n = 1 + index % 50
            triangulation = sample_triangulation(GluingConfig(n=n, seed=index))
            summary = triangulation.validate()
            dual = triangulation.dual()
            dual_graph = dual.underlying_graph().graph
            with self.subTest(index=index, n=n):
                self.assertEqual(summary.vertices - summary.edges + summary.faces, 2 - 2 * summary.genus)
                self.assertEqual(dual.dual(), triangulation)
                self.assertEqual(set(dual_graph.degrees), {3})
                self.assertEqual(dual_graph.total_volume, 6 * n)
                self.assertEqual(triangulation.underlying_graph().graph.total_volume, 6 * n)

    def test_same_seed_same_map(self):
        cfg = GluingConfig(n=6, seed=42)
        self.assertEqual(sample_triangulation(cfg), sample_triangulation(cfg))
        self.assertEqual(sample_gluing(6, seed=42), sample_gluing(6, seed=42))

    def test_target_genus(self):
        triangulation = sample_triangulation(GluingConfig(n=4, target_genus=1, seed=3))
        self.assertEqual(triangulation.genus, 1)

    def test_from_theta(self):
        self.assertEqual(GluingConfig.from_theta(10, Fraction(1, 10)).target_genus, 1)
        # halves round up
        self.assertEqual(GluingConfig.from_theta(5, "1/10").target_genus, 1)
        self.assertEqual(GluingConfig.from_theta(40, "1/4").target_genus, 10)
        for theta in (0, Fraction(1, 2)):
            with self.assertRaises(ConfigError):
                GluingConfig.from_theta(10, theta)

    def test_infeasible_genus(self):
        with self.assertRaises(ConfigError):
            GluingConfig(n=2, target_genus=2)
        with self.assertRaises(ConfigError):
            GluingConfig(n=0)
        with self.assertRaises(ArgumentError):
            list(enumerate_gluings(0))

    def test_sampling_error_carries_histogram(self):
        with patch("sampler.gluing.draw_gluing", return_value=tetrahedron()):
            with self.assertRaises(SamplingError) as ctx:
                sample_triangulation(GluingConfig(n=3, target_genus=2, max_attempts=5))
        self.assertEqual(ctx.exception.histogram, {0: 5})


class TestFlipModel(unittest.TestCase):
    def test_base_gluings(self):
        for genus in range(5):
            n = 1 if genus == 0 else 2 * genus - 1
            base = CombinatorialMap.from_face_gluing(triangle_faces(n), base_gluing(genus))
            with self.subTest(genus=genus):
                self.assertTrue(base.is_transitive())
                self.assertEqual(base.genus, genus)
                self.assertEqual(len(base.vertices()), 3 if genus == 0 else 1)

    def test_subdivision_adds_a_vertex(self):
        alpha = base_gluing(1)
        subdivide_triangle(alpha, 0)
        torus = CombinatorialMap.from_face_gluing(triangle_faces(2), alpha)
        summary = torus.validate()
        self.assertEqual((summary.vertices, summary.edges, summary.faces, summary.genus), (2, 6, 4, 1))
        self.assertEqual(sorted(len(v) for v in torus.vertices()), [3, 9])

    def test_flip_edge(self):
        alpha = base_gluing(0)
        self.assertTrue(flip_edge(alpha, 0))
        sphere = CombinatorialMap.from_face_gluing(triangle_faces(1), alpha)
        self.assertEqual(sphere.genus, 0)
        self.assertEqual(len(sphere.vertices()), 3)

        # both sides of the edge of dart 0 lie in triangle 0
        folded = [1, 0, 3, 2, 5, 4]
        self.assertFalse(flip_edge(folded, 0))
        self.assertEqual(folded, [1, 0, 3, 2, 5, 4])

    def test_flip_triangulations(self):
        for n, genus in ((1, 0), (3, 2), (12, 0), (12, 3), (25, 13), (30, 10)):
            triangulation = flip_triangulation(n, genus, np.random.default_rng(n + genus))
            summary = triangulation.validate()
            with self.subTest(n=n, genus=genus):
                self.assertTrue(triangulation.is_triangulation())
                self.assertEqual(summary.genus, genus)
                self.assertEqual(summary.faces, 2 * n)
                self.assertEqual(summary.edges, 3 * n)
                self.assertEqual(summary.vertices, n + 2 - 2 * genus)
                self.assertEqual(set(triangulation.dual().underlying_graph().graph.degrees), {3})

    def test_low_genus_at_desk_scale(self):
        # uniform gluings of 1000 triangles land near genus 245
        cfg = GluingConfig.from_theta(500, Fraction(1, 10), seed=1, model="flips")
        triangulation = sample_triangulation(cfg)
        self.assertEqual(genus_of_triangulation(triangulation), 50)
        self.assertEqual(triangulation, sample_triangulation(cfg))

    def test_model_config(self):
        with self.assertRaises(ConfigError):
            GluingConfig(n=4, model="flips")
        with self.assertRaises(ConfigError):
            GluingConfig(n=4, target_genus=1, model="shuffle")
        with self.assertRaises(ConfigError):
            flip_triangulation(2, 2, np.random.default_rng(0))


class TestGenusDistribution(unittest.TestCase):
    def test_exact_two_triangles(self):
        # twelve gluings give a sphere, the three same-orientation ones a torus
        self.assertEqual(exact_genus_distribution(1), ({0: 12, 1: 3}, 0))
        self.assertEqual(sum(1 for _ in enumerate_gluings(1)), 15)

    def test_exact_four_triangles(self):
        counts, disconnected = exact_genus_distribution(2)
        # 11!! perfect matchings of 12 sides
        self.assertEqual(sum(counts.values()) + disconnected, 10395)
        self.assertGreater(disconnected, 0)
        self.assertEqual(set(counts), {0, 1})

    def test_histogram_matches_exact_distribution(self):
        trials = 100000 if FULL_CORPUS else 3000
        for n in (1, 2):
            counts, disconnected = exact_genus_distribution(n)
            total = sum(counts.values()) + disconnected
            histogram = genus_histogram(n, trials, seed=11)
            self.assertTrue(set(histogram) <= set(counts))
            for genus, count in counts.items():
                p = count / total
                sigma = sqrt(trials * p * (1 - p))
                with self.subTest(n=n, genus=genus):
                    self.assertLessEqual(abs(histogram.get(genus, 0) - trials * p), 4 * sigma)

    def test_histogram_ignores_worker_count(self):
        sequential = genus_histogram(2, 400, seed=5, chunks=4)
        self.assertEqual(sequential, genus_histogram(2, 400, seed=5, chunks=4, max_workers=2))


if __name__ == "__main__":
    unittest.main()
