from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from cheeger import isolated_vertices_exact, positive_kappa, strongly_isolated_vertices_exact, within_cap
from models import BadSetCertificate, Multigraph, VertexSet
from models.errors import ArgumentError


@dataclass(frozen=True)
class IsolationEstimate:
    volume: int
    union: VertexSet
    witnesses: Tuple[BadSetCertificate, ...]
    exact: bool
    strong: bool

    def fraction(self, total_volume: int) -> Fraction:
        return Fraction(self.volume, total_volume) if total_volume else Fraction(0)


def estimate_isolated_volume(
    graph: Multigraph,
    kappa,
    budget: Optional[int] = None,
    strong: bool = False,
    cap: Optional[int] = None,
    seed: Optional[int] = None,
) -> IsolationEstimate:
    """
    Lower bound on vol(Isol_kappa(G)) (vol(Isol+_kappa(G)) when strong).

    Within the cap the value is exact. Above it, the union of the bad sets
    the heuristic strategies certify among `budget` candidate cuts each;
    every counted vertex lies in a certified bad set, so the value never
    exceeds the true volume.
    """
    kappa = positive_kappa(kappa)
    if budget is None:
        from expander_config import DEFAULT_BUDGET

        budget = DEFAULT_BUDGET
    if budget < 0:
        raise ArgumentError("budget must be non-negative")

    if within_cap(graph, cap):
        oracle = strongly_isolated_vertices_exact if strong else isolated_vertices_exact
        union = oracle(graph, kappa, cap)
        return IsolationEstimate(graph.volume(union), union, (), True, strong)

    from expander_config import HEURISTIC_CHAIN, make_finder

    witnesses = []
    union = VertexSet.empty(graph.vertex_count)
    if graph.edge_count > 0:
        for name in HEURISTIC_CHAIN:
            finder = make_finder(name, seed=seed)
            for certificate in finder.certify_all(graph, kappa, budget):
                if strong and not certificate.strong:
                    continue
                if not certificate.set.issubset(union):
                    witnesses.append(certificate)
                    union = union.union(certificate.set)
    return IsolationEstimate(graph.volume(union), union, tuple(witnesses), False, strong)
