#!/usr/bin/env python3
"""
Test cases for the exact oracles, checked against hand-computed values and
a networkx brute force over every vertex subset.
"""

import os
import sys
import unittest
from fractions import Fraction

# Add project root to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from cheeger import (
    certify_bad_set,
    check_certificate,
    cheeger_exact,
    is_bad_set,
    is_expander,
    is_strong_bad_set,
    isolated_vertices_exact,
    iter_bad_sets,
    iter_connected_sets,
    strongly_isolated_vertices_exact,
)
from models import BadSetCertificate, CutReport, Multigraph, VertexSet
from models.errors import ArgumentError, CapacityError, DegenerateGraphError
from tests.base import (
    ExpanderTestCase,
    admissible_sets,
    barbell,
    brute_force_cheeger,
    brute_force_isolated,
    complete_graph,
    cycle_graph,
    loop_with_pendant,
    random_corpus,
    star,
)

# (name, graph, h, minimizing set)
CHEEGER_FIXTURES = [
    ("triangle", complete_graph(3), Fraction(1), [0]),
    ("k4", complete_graph(4), Fraction(2, 3), [0, 1]),
    ("c4", cycle_graph(4), Fraction(1, 2), [0, 1]),
    ("c6", cycle_graph(6), Fraction(1, 3), [0, 1, 2]),
    ("barbell", barbell(), Fraction(1, 7), [0, 1, 2]),
    ("star", star(), Fraction(1), [1]),
    ("loop_with_pendant", loop_with_pendant(), Fraction(1), [1]),
]


class TestCheegerConstant(ExpanderTestCase):
    def test_fixtures(self):
        for name, graph, expected, argmin in CHEEGER_FIXTURES:
            with self.subTest(graph=name):
                value, minimizer = cheeger_exact(graph)
                self.assertEqual(value, expected)
                self.assertVertexSet(minimizer, argmin)

    def test_matches_brute_force(self):
        for index, graph in enumerate(random_corpus()):
            with self.subTest(graph=index):
                value, minimizer = cheeger_exact(graph)
                self.assertEqual(value, brute_force_cheeger(graph))
                self.assertEqual(graph.cut_report(minimizer).ratio, value)
                self.assertTrue(graph.is_connected_set(minimizer))

    def test_edgeless_graph(self):
        with self.assertRaises(DegenerateGraphError):
            cheeger_exact(Multigraph(3, []))

    def test_no_admissible_set(self):
        # one vertex with a loop: its only set holds the whole volume
        with self.assertRaises(DegenerateGraphError):
            cheeger_exact(Multigraph(1, [(0, 0)]))

    def test_capacity(self):
        with self.assertRaises(CapacityError):
            cheeger_exact(cycle_graph(6), cap=5)
        self.assertEqual(cheeger_exact(cycle_graph(6), cap=6)[0], Fraction(1, 3))

    def test_connected_set_enumeration(self):
        for index, graph in enumerate(random_corpus(count=15)):
            with self.subTest(graph=index):
                limit = graph.total_volume // 2
                produced = sorted(
                    VertexSet.from_mask(mask, graph.vertex_count).sorted()
                    for mask, _, _ in iter_connected_sets(graph, limit)
                )
                expected = sorted(admissible_sets(graph, connected_only=True))
                self.assertEqual(produced, expected)


class TestBadSets(ExpanderTestCase):
    def test_bad_set_predicates(self):
        graph = barbell()
        left = self.vset(graph, [0, 1, 2])
        self.assertTrue(is_bad_set(graph, left, Fraction(1, 5)))
        self.assertTrue(is_strong_bad_set(graph, left, Fraction(1, 5)))
        # strict inequality
        self.assertFalse(is_bad_set(graph, left, Fraction(1, 7)))
        # disconnected sets are never bad
        self.assertFalse(is_bad_set(graph, self.vset(graph, [0, 5]), Fraction(1)))

    def test_kappa_must_be_positive(self):
        with self.assertRaises(ArgumentError):
            is_bad_set(barbell(), self.vset(barbell(), [0]), 0)

    def test_certify_bad_set(self):
        graph = barbell()
        certificate = certify_bad_set(graph, self.vset(graph, [3, 4, 5]), "1/5")
        self.assertIsNotNone(certificate)
        self.assertEqual(certificate.ratio, Fraction(1, 7))
        self.assertTrue(certificate.strong)
        self.assertTrue(check_certificate(graph, certificate))
        self.assertIsNone(certify_bad_set(graph, VertexSet.empty(6), "1/5"))
        self.assertIsNone(certify_bad_set(graph, self.vset(graph, [2]), "1/5"))

    def test_forged_certificate_rejected(self):
        graph = barbell()
        forged = BadSetCertificate(
            set=self.vset(graph, [0, 1]),
            report=CutReport(boundary=1, volume_in=4, volume_total=14),
            kappa=Fraction(1, 2),
        )
        self.assertFalse(check_certificate(graph, forged))

    def test_iter_bad_sets(self):
        sets = [c.set.sorted() for c in iter_bad_sets(barbell(), Fraction(1, 5))]
        self.assertEqual(sorted(sets), [[0, 1, 2], [3, 4, 5]])
        self.assertEqual(list(iter_bad_sets(complete_graph(4), Fraction(2, 3))), [])

    def test_isolated_vertices(self):
        graph = barbell()
        for oracle in (isolated_vertices_exact, strongly_isolated_vertices_exact):
            union = oracle(graph, Fraction(1, 5))
            self.assertEqual(len(union), 6)
            self.assertEqual(graph.volume(union), 14)
        self.assertFalse(isolated_vertices_exact(graph, Fraction(1, 7)))

    def test_isolated_match_brute_force(self):
        for index, graph in enumerate(random_corpus()):
            for kappa in (Fraction(1, 4), Fraction(1, 2)):
                with self.subTest(graph=index, kappa=kappa):
                    self.assertEqual(isolated_vertices_exact(graph, kappa), brute_force_isolated(graph, kappa))
                    self.assertEqual(
                        strongly_isolated_vertices_exact(graph, kappa),
                        brute_force_isolated(graph, kappa, strong=True),
                    )

    def test_strongly_isolated_within_isolated(self):
        for graph in random_corpus(count=15):
            strong = strongly_isolated_vertices_exact(graph, Fraction(1, 2))
            self.assertTrue(strong.issubset(isolated_vertices_exact(graph, Fraction(1, 2))))

    def test_isolation_grows_with_kappa(self):
        kappas = (Fraction(1, 8), Fraction(1, 5), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1))
        for index, graph in enumerate(random_corpus()):
            unions = [isolated_vertices_exact(graph, kappa) for kappa in kappas]
            strong = [strongly_isolated_vertices_exact(graph, kappa) for kappa in kappas]
            for i in range(len(kappas) - 1):
                with self.subTest(graph=index, kappa=kappas[i]):
                    self.assertTrue(unions[i].issubset(unions[i + 1]))
                    self.assertTrue(strong[i].issubset(strong[i + 1]))


class TestIsExpander(ExpanderTestCase):
    def test_fixtures(self):
        self.assertTrue(is_expander(complete_graph(4), Fraction(2, 3)))
        self.assertFalse(is_expander(complete_graph(4), Fraction(3, 4)))
        self.assertFalse(is_expander(barbell(), Fraction(1, 5)))

    def test_vacuous_without_admissible_sets(self):
        self.assertTrue(is_expander(Multigraph(1, [(0, 0)]), Fraction(1)))

    def test_agrees_with_cheeger_constant(self):
        for index, graph in enumerate(random_corpus(count=20)):
            with self.subTest(graph=index):
                value = cheeger_exact(graph)[0]
                self.assertTrue(is_expander(graph, value))
                self.assertFalse(is_expander(graph, value + Fraction(1, 1000)))


if __name__ == "__main__":
    unittest.main()
