from typing import Iterator, Optional

import numpy as np

from models import Multigraph

from .base import BadSetFinder, Cut, incremental_cuts


class BallGrowingFinder(BadSetFinder):
    """Breadth-first balls of radius 0..max_radius around every vertex"""

    name = "ball_growing"

    def __init__(self, seed: Optional[int] = None, max_radius: Optional[int] = None):
        super().__init__(seed=seed)
        if max_radius is None:
            from expander_config import BALL_MAX_RADIUS

            max_radius = BALL_MAX_RADIUS
        self.max_radius = max_radius

    def _centers(self, graph: Multigraph):
        centers = np.arange(graph.vertex_count)
        if self.seed is not None:
            # seeded runs visit centers in a shuffled order, which only matters under a budget
            np.random.default_rng(self.seed).shuffle(centers)
        return [int(c) for c in centers]

    def iter_cuts(self, graph: Multigraph) -> Iterator[Cut]:
        for center in self._centers(graph):
            ball = 1 << center
            layer = ball
            order = [center]
            ball_sizes = [1]  # prefix lengths at which a full ball is reached
            for _ in range(self.max_radius):
                grown = 0
                pending = layer
                while pending:
                    bit = pending & -pending
                    pending ^= bit
                    grown |= graph.neighbor_mask(bit.bit_length() - 1)
                layer = grown & ~ball
                if not layer:
                    break
                ball |= layer
                pending = layer
                while pending:
                    bit = pending & -pending
                    pending ^= bit
                    order.append(bit.bit_length() - 1)
                ball_sizes.append(len(order))

            wanted = set(ball_sizes)
            for size, cut in enumerate(incremental_cuts(graph, order), start=1):
                if size in wanted:
                    yield cut

    def __repr__(self) -> str:
        return f"BallGrowingFinder(seed={self.seed}, max_radius={self.max_radius})"
