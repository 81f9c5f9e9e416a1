from typing import Iterator, Optional, Sequence

from cheeger import within_cap
from models import BadSetCertificate, Multigraph

from .ball_growing import BallGrowingFinder
from .base import BadSetFinder, best_certificate
from .exact import ExactFinder
from .sweep import SweepFinder


class RoutedFinder(BadSetFinder):
    """Exact search within the enumeration cap, the heuristic chain above it"""

    name = "auto"

    def __init__(
        self,
        exact: ExactFinder,
        heuristics: Sequence[BadSetFinder],
        cap: Optional[int] = None,
    ):
        super().__init__(seed=exact.seed)
        self.exact = exact
        self.heuristics = list(heuristics)
        self.cap = cap

    def route(self, graph: Multigraph) -> Sequence[BadSetFinder]:
        if within_cap(graph, self.cap):
            return [self.exact]
        return self.heuristics

    def is_exact_for(self, graph: Multigraph) -> bool:
        return within_cap(graph, self.cap)

    def iter_cuts(self, graph: Multigraph):
        for finder in self.route(graph):
            yield from finder.iter_cuts(graph)

    def certify_all(
        self, graph: Multigraph, kappa, budget: Optional[int] = None
    ) -> Iterator[BadSetCertificate]:
        for finder in self.route(graph):
            yield from finder.certify_all(graph, kappa, budget)

    def find(self, graph: Multigraph, kappa) -> Optional[BadSetCertificate]:
        for finder in self.route(graph):
            certificate = finder.find(graph, kappa)
            if certificate is not None:
                return certificate
        return None


__all__ = [
    "BadSetFinder",
    "BallGrowingFinder",
    "ExactFinder",
    "RoutedFinder",
    "SweepFinder",
    "best_certificate",
]
