from typing import Iterator, List, Optional

import numpy as np

from models import Multigraph

from .base import BadSetFinder, Cut, incremental_cuts


def lazy_walk_matrix(graph: Multigraph) -> np.ndarray:
    """(I + D^-1/2 A D^-1/2) / 2 on the vertices of positive degree; loops sit on the diagonal twice"""
    active = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]
    position = {v: i for i, v in enumerate(active)}
    adjacency = np.zeros((len(active), len(active)))
    for u, v in graph.edges:
        adjacency[position[u], position[v]] += 1
        adjacency[position[v], position[u]] += 1
    scale = 1.0 / np.sqrt(np.array([graph.degree(v) for v in active], dtype=float))
    normalized = adjacency * scale[:, None] * scale[None, :]
    return (np.eye(len(active)) + normalized) / 2


def second_eigenvector_order(
    graph: Multigraph, iterations: int, rng: np.random.Generator
) -> List[int]:
    """
    Vertices of positive degree sorted by an approximation of the second
    eigenvector of the lazy walk, rescaled by D^-1/2.

    Power iteration with the top eigenvector (proportional to sqrt(deg))
    projected out after every step.
    """
    active = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]
    if len(active) < 2:
        return active
    walk = lazy_walk_matrix(graph)
    top = np.sqrt(np.array([graph.degree(v) for v in active], dtype=float))
    top /= np.linalg.norm(top)

    vector = rng.standard_normal(len(active))
    for _ in range(iterations):
        vector -= vector.dot(top) * top
        norm = np.linalg.norm(vector)
        if norm == 0:
            break
        vector = walk @ (vector / norm)
    vector -= vector.dot(top) * top

    embedding = vector / top
    # stable sort keeps index order among equal coordinates
    ranked = np.argsort(embedding, kind="stable")
    return [active[int(i)] for i in ranked]


class SweepFinder(BadSetFinder):
    """Prefix sweep along a spectral ordering of the vertices"""

    name = "sweep"

    def __init__(self, seed: Optional[int] = None, iterations: Optional[int] = None):
        super().__init__(seed=seed)
        if iterations is None:
            from expander_config import SWEEP_ITERATIONS

            iterations = SWEEP_ITERATIONS
        self.iterations = iterations

    def iter_cuts(self, graph: Multigraph) -> Iterator[Cut]:
        # seed 0 when unseeded so repeated runs agree
        rng = np.random.default_rng(0 if self.seed is None else self.seed)
        order = second_eigenvector_order(graph, self.iterations, rng)
        # the last prefix is every active vertex and cuts nothing
        for index, cut in enumerate(incremental_cuts(graph, order)):
            if index + 1 < len(order):
                yield cut

    def __repr__(self) -> str:
        return f"SweepFinder(seed={self.seed}, iterations={self.iterations})"
