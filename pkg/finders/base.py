from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from cheeger import positive_kappa
from models import BadSetCertificate, CutReport, Multigraph, VertexSet, ratio_below
from models.errors import DegenerateGraphError

# (mask, volume, boundary) of one candidate vertex set
Cut = Tuple[int, int, int]


class BadSetFinder(ABC):
    """
    A strategy for hunting kappa-bad sets.

    Subclasses only propose candidate cuts; testing them, splitting them into
    connected pieces and picking the best certificate is shared here.
    """

    name = "base"
    complete = False

    def __init__(self, seed: Optional[int] = None):
        self.seed = seed

    @abstractmethod
    def iter_cuts(self, graph: Multigraph) -> Iterator[Cut]:
        """Candidate cuts to test (strategy-specific)"""
        pass

    def is_exact_for(self, graph: Multigraph) -> bool:
        """Whether a None from find() proves that no bad set exists"""
        return self.complete

    def find(self, graph: Multigraph, kappa) -> Optional[BadSetCertificate]:
        """Main public interface: the best certificate found, or None"""
        kappa = positive_kappa(kappa)
        if graph.edge_count == 0:
            raise DegenerateGraphError("cannot hunt bad sets in an edgeless graph")
        return best_certificate(self.certify_all(graph, kappa))

    def certify_all(
        self, graph: Multigraph, kappa, budget: Optional[int] = None
    ) -> Iterator[BadSetCertificate]:
        """
        Every distinct bad set found among the first `budget` candidate cuts.

        Each candidate is tested on both sides of the cut. A side with at most
        half the volume and ratio below kappa always has a component that is
        itself bad, so only such sides are split into components.
        """
        kappa = positive_kappa(kappa)
        total = graph.total_volume
        full = graph.full_mask
        seen = set()
        for index, (mask, volume, boundary) in enumerate(self.iter_cuts(graph)):
            if budget is not None and index >= budget:
                break
            for side, side_volume in ((mask, volume), (full & ~mask, total - volume)):
                if side_volume <= 0 or 2 * side_volume > total:
                    continue
                if not ratio_below(boundary, side_volume, kappa):
                    continue
                for component in graph.component_masks(side):
                    if component in seen:
                        continue
                    seen.add(component)
                    certificate = self.certify_mask(graph, component, kappa)
                    if certificate is not None:
                        yield certificate

    def certify_mask(
        self, graph: Multigraph, mask: int, kappa: Fraction
    ) -> Optional[BadSetCertificate]:
        """Certificate for a connected vertex set given as a mask, None when it is not bad"""
        vertex_set = VertexSet.from_mask(mask, graph.vertex_count)
        volume = graph.volume(vertex_set)
        if volume == 0 or 2 * volume > graph.total_volume:
            return None
        report = CutReport(
            boundary=graph.boundary(vertex_set, vertex_set.complement()),
            volume_in=volume,
            volume_total=graph.total_volume,
        )
        if not report.below(kappa):
            return None
        return BadSetCertificate(
            set=vertex_set,
            report=report,
            kappa=kappa,
            strong=graph.is_connected_mask(graph.full_mask & ~mask),
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}(seed={self.seed})"


def best_certificate(certificates) -> Optional[BadSetCertificate]:
    """Smallest ratio, then smallest volume, then lexicographic vertex order"""
    best = None
    for certificate in certificates:
        if best is None or certificate.sort_key() < best.sort_key():
            best = certificate
    return best


def incremental_cuts(graph: Multigraph, order: List[int]) -> Iterator[Cut]:
    """Cuts of the growing prefixes of order, with volume and boundary kept incrementally"""
    mask = volume = boundary = 0
    for w in order:
        inside = sum(m for x, m in graph.neighbors(w) if mask >> x & 1)
        boundary += graph.degree(w) - 2 * graph.loop_count(w) - 2 * inside
        volume += graph.degree(w)
        mask |= 1 << w
        yield mask, volume, boundary
