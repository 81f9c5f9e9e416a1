from typing import Iterator, Optional

import numpy as np

from cheeger import iter_bad_sets, iter_connected_sets, positive_kappa, require_within_cap
from models import BadSetCertificate, Multigraph
from models.errors import ArgumentError, DegenerateGraphError

from .base import BadSetFinder, Cut, best_certificate

CHOICES = ("best", "random")


class ExactFinder(BadSetFinder):
    """
    Complete search over every connected set; refuses graphs over the cap.

    choice="best" returns the smallest-ratio certificate (ties by volume, then
    vertex order); choice="random" draws uniformly among all bad sets from a
    generator seeded once per finder, so a fixed seed replays the same run.
    """

    name = "exact"
    complete = True

    def __init__(self, cap: Optional[int] = None, seed: Optional[int] = None, choice: str = "best"):
        super().__init__(seed=seed)
        if choice not in CHOICES:
            raise ArgumentError(f"choice must be one of {CHOICES}, got '{choice}'")
        self.cap = cap
        self.choice = choice
        self._rng = np.random.default_rng(seed)

    def iter_cuts(self, graph: Multigraph) -> Iterator[Cut]:
        require_within_cap(graph, self.cap)
        return iter_connected_sets(graph, graph.total_volume // 2)

    def certify_all(
        self, graph: Multigraph, kappa, budget: Optional[int] = None
    ) -> Iterator[BadSetCertificate]:
        for index, certificate in enumerate(iter_bad_sets(graph, kappa, cap=self.cap)):
            if budget is not None and index >= budget:
                break
            yield certificate

    def find(self, graph: Multigraph, kappa) -> Optional[BadSetCertificate]:
        kappa = positive_kappa(kappa)
        if graph.edge_count == 0:
            raise DegenerateGraphError("cannot hunt bad sets in an edgeless graph")
        if self.choice == "best":
            return best_certificate(self.certify_all(graph, kappa))
        everything = list(self.certify_all(graph, kappa))
        if not everything:
            return None
        return everything[int(self._rng.integers(len(everything)))]

    def __repr__(self) -> str:
        return f"ExactFinder(cap={self.cap}, seed={self.seed}, choice='{self.choice}')"
