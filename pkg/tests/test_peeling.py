#!/usr/bin/env python3
"""
Test cases for the peeling process, its trace and the trace replay.
"""

import os
import sys
import unittest
from dataclasses import replace
from fractions import Fraction

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from cheeger import is_expander, isolated_vertices_exact
from models import Multigraph
from models.errors import ArgumentError, CapacityError, TraceValidationError
from peeling import (
    check_removed_are_isolated,
    edge_lower_bound,
    find_bad_set,
    peel,
    peel_components,
    validate_eps,
    verify_peel,
)
from tests.base import (
    FULL_CORPUS,
    ExpanderTestCase,
    barbell,
    complete_graph,
    cycle_graph,
    k5_k4_pendant,
    random_corpus,
)

EPS = Fraction(1, 8)


class TestFindBadSet(ExpanderTestCase):
    def test_barbell(self):
        certificate = find_bad_set(barbell(), Fraction(1, 5))
        self.assertVertexSet(certificate.set, [0, 1, 2])
        self.assertEqual(certificate.ratio, Fraction(1, 7))

    def test_no_bad_set(self):
        # h(K4) = 2/3 and h(C4) = 1/2
        self.assertIsNone(find_bad_set(complete_graph(4), Fraction(1, 2)))
        for strategy in ("exact", "ball_growing", "sweep", "auto"):
            with self.subTest(strategy=strategy):
                self.assertIsNone(find_bad_set(cycle_graph(4), Fraction(1, 4), strategy=strategy))

    def test_exact_over_the_cap(self):
        with self.assertRaises(CapacityError):
            find_bad_set(barbell(), Fraction(1, 5), cap=5)
        self.assertIsNotNone(find_bad_set(barbell(), Fraction(1, 5), strategy="auto", cap=5))


class TestPeelExamples(ExpanderTestCase):
    EPS = Fraction(1, 4)

    def test_expander_stays(self):
        result, trace = peel(complete_graph(4), Fraction(1, 2), self.EPS)
        self.assertEqual(result, complete_graph(4))
        self.assertEqual(trace.steps, ())

    def test_barbell_loses_a_triangle(self):
        result, trace = peel(barbell(), Fraction(1, 5), self.EPS)
        self.assertEqual(trace.kappa_eps, Fraction(3, 20))
        self.assertEqual(trace.tau, 1)
        self.assertEqual(result.edge_count, 3)

    def test_star_is_consumed(self):
        graph = Multigraph(5, [(0, v) for v in range(1, 5)])
        result, trace = peel(graph, Fraction(2), self.EPS)
        self.assertTrue(trace.exhausted)
        self.assertEqual(result.edge_count, 0)
        self.assertTrue(verify_peel(graph, trace, Fraction(2), self.EPS))


class TestPeel(ExpanderTestCase):
    def test_barbell(self):
        graph = barbell()
        result, trace = peel(graph, Fraction(1, 4), EPS)
        self.assertEqual(trace.kappa_eps, Fraction(7, 32))
        self.assertEqual(trace.tau, 1)
        self.assertVertexSet(trace.steps[0].set, [0, 1, 2])
        self.assertEqual(trace.steps[0].certificate.ratio, Fraction(1, 7))
        self.assertEqual(trace.steps[0].edges_remaining, 3)
        self.assertVertexSet(trace.final_set, [3, 4, 5])
        self.assertFalse(trace.exhausted)
        self.assertEqual(result, complete_graph(3))

        self.assertTrue(verify_peel(graph, trace, Fraction(1, 4), EPS))
        self.assertTrue(check_removed_are_isolated(graph, trace, trace.kappa_eps))
        self.assertEqual(edge_lower_bound(graph, trace), 0)

    def test_edge_bound_when_removed_sets_are_isolated(self):
        graph = k5_k4_pendant()
        kappa = Fraction(1, 4)
        result, trace = peel(graph, kappa, EPS)
        self.assertTrue(verify_peel(graph, trace, kappa, EPS))
        self.assertTrue(check_removed_are_isolated(graph, trace, trace.kappa_eps))
        isolated = isolated_vertices_exact(graph, trace.kappa_eps)
        self.assertGreaterEqual(result.edge_count, graph.edge_count - graph.volume(isolated))
        self.assertTrue(is_expander(result, trace.kappa_eps))

    def test_expander_is_left_alone(self):
        graph = complete_graph(5)
        result, trace = peel(graph, Fraction(1, 2), EPS)
        self.assertEqual(trace.tau, 0)
        self.assertEqual(result, graph)
        self.assertEqual(len(trace.final_set), 5)

    def test_exhaustion(self):
        # kappa above 1 makes a single edge bad
        graph = Multigraph(2, [(0, 1)])
        result, trace = peel(graph, Fraction(2), EPS)
        self.assertTrue(trace.exhausted)
        self.assertEqual(result.vertex_count, 0)
        self.assertVertexSet(trace.stranded, [1])
        self.assertTrue(verify_peel(graph, trace, Fraction(2), EPS))

    def test_disconnected_input(self):
        graph = Multigraph(4, [(0, 1), (2, 3)])
        with self.assertRaises(ArgumentError):
            peel(graph, Fraction(1, 4), EPS)
        peels = peel_components(graph, Fraction(1, 4), EPS)
        self.assertEqual(len(peels), 2)
        self.assertEqual([p.final_in_host().sorted() for p in peels], [[0, 1], [2, 3]])

    def test_eps_range(self):
        self.assertEqual(validate_eps("1/8"), EPS)
        for eps in (0, Fraction(1, 2), Fraction(3, 4)):
            with self.assertRaises(ArgumentError):
                validate_eps(eps)

    def test_random_choice_is_reproducible(self):
        graph = barbell()
        first = peel(graph, Fraction(1, 4), EPS, choice="random", seed=9)[1]
        second = peel(graph, Fraction(1, 4), EPS, choice="random", seed=9)[1]
        self.assertEqual([s.set for s in first.steps], [s.set for s in second.steps])
        self.assertTrue(verify_peel(graph, first, Fraction(1, 4), EPS))


class TestPeelCorpus(ExpanderTestCase):
    KAPPAS = (Fraction(1, 4), Fraction(1, 2), Fraction(1))
    EPSILONS = (Fraction(1, 8), Fraction(1, 4), Fraction(2, 5))

    def test_corpus(self):
        for index, graph in enumerate(random_corpus()):
            for kappa in (Fraction(1, 4), Fraction(1, 2)):
                with self.subTest(graph=index, kappa=kappa):
                    result, trace = peel(graph, kappa, EPS)
                    self.assertTrue(verify_peel(graph, trace, kappa, EPS))
                    self.assertGreaterEqual(result.edge_count, edge_lower_bound(graph, trace))
                    if result.edge_count:
                        self.assertTrue(is_expander(result, trace.kappa_eps))
                        self.assertIsExpanderByBruteForce(result, trace.kappa_eps)

    def assertLargeExpanderRemains(self, graph, result, trace, eps):
        """Under vol(Isol_kappa) <= eps m: removed sets are isolated, (1 - eps) m edges stay"""
        self.assertTrue(check_removed_are_isolated(graph, trace, trace.kappa_eps))
        self.assertGreaterEqual(result.edge_count, (1 - eps) * graph.edge_count)
        self.assertGreater(result.edge_count, 0)
        self.assertTrue(is_expander(result, trace.kappa_eps))

    def test_few_isolated_vertices_leave_a_large_expander(self):
        reruns = 5 if FULL_CORPUS else 2
        applicable = 0
        for index, graph in enumerate(random_corpus()):
            for kappa in self.KAPPAS:
                isolated_volume = graph.volume(isolated_vertices_exact(graph, kappa))
                for eps in self.EPSILONS:
                    if isolated_volume > eps * graph.edge_count:
                        continue
                    applicable += 1
                    with self.subTest(graph=index, kappa=kappa, eps=eps):
                        result, trace = peel(graph, kappa, eps)
                        self.assertLargeExpanderRemains(graph, result, trace, eps)
                        for seed in range(reruns):
                            result, trace = peel(graph, kappa, eps, choice="random", seed=seed)
                            self.assertTrue(verify_peel(graph, trace, kappa, eps))
                            self.assertLargeExpanderRemains(graph, result, trace, eps)
        self.assertGreater(applicable, 0)

    def test_random_tie_breaks(self):
        reruns = 20 if FULL_CORPUS else 3
        kappa = Fraction(1, 4)
        for index, graph in enumerate(random_corpus(count=None if FULL_CORPUS else 10)):
            for seed in range(reruns):
                with self.subTest(graph=index, seed=seed):
                    result, trace = peel(graph, kappa, EPS, choice="random", seed=seed)
                    self.assertTrue(verify_peel(graph, trace, kappa, EPS))
                    if result.edge_count:
                        self.assertTrue(is_expander(result, trace.kappa_eps))


class TestVerifyPeel(ExpanderTestCase):
    def setUp(self):
        self.graph = barbell()
        self.kappa = Fraction(1, 4)
        _, self.trace = peel(self.graph, self.kappa, EPS)

    def test_wrong_parameters(self):
        self.assertFalse(verify_peel(self.graph, self.trace, Fraction(1, 3), EPS))

    def test_tampered_edge_count(self):
        step = replace(self.trace.steps[0], edges_remaining=4)
        tampered = replace(self.trace, steps=(step,))
        self.assertFalse(verify_peel(self.graph, tampered, self.kappa, EPS))

    def test_tampered_ratio(self):
        # boundary 2 against volume 7: ratio 2/7 is above kappa_eps = 7/32
        step = self.trace.steps[0]
        report = replace(step.certificate.report, boundary=2)
        self.assertGreater(report.ratio, self.trace.kappa_eps)
        certificate = replace(step.certificate, report=report)
        tampered = replace(self.trace, steps=(replace(step, certificate=certificate),))
        self.assertFalse(verify_peel(self.graph, tampered, self.kappa, EPS))

    def test_final_set_must_be_an_expander(self):
        # stopping early leaves a bad set behind
        early = replace(self.trace, steps=(), final_set=self.graph.vertices())
        self.assertFalse(verify_peel(self.graph, early, self.kappa, EPS))

    def test_wrong_host(self):
        with self.assertRaises(TraceValidationError):
            verify_peel(complete_graph(4), self.trace, self.kappa, EPS)

    def test_removed_set_outside_survivors(self):
        first = self.trace.steps[0]
        doubled = replace(self.trace, steps=(first, first))
        with self.assertRaises(TraceValidationError) as ctx:
            verify_peel(self.graph, doubled, self.kappa, EPS)
        self.assertEqual(ctx.exception.step, 2)


if __name__ == "__main__":
    unittest.main()
