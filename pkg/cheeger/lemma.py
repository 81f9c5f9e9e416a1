from typing import Optional

from models import BadSetCertificate, Multigraph, VertexSet
from models.errors import ArgumentError, ConstructionFailure

from .exact import is_bad_set, positive_kappa, strongly_isolated_vertices_exact, within_cap


def strengthen_bad_set(
    graph: Multigraph,
    vertex_set: VertexSet,
    kappa,
    eps=None,
    check_hypotheses: bool = False,
    cap: Optional[int] = None,
) -> BadSetCertificate:
    """
    Turn a kappa^2-bad set X into a strong kappa-bad set Y containing it.

    Y is X together with every component of G minus X except the largest
    one (largest volume, ties to the smallest vertex). The result is checked
    rather than trusted; a failed check raises ConstructionFailure naming the
    clause, which means the caller was outside the construction's hypotheses.

    With check_hypotheses the hypotheses themselves are checked first: kappa
    below min((1-2eps)/3, 1-4eps) and, when the graph is within the
    enumeration cap, vol(Isol+_kappa) <= eps vol(G).
    """
    kappa = positive_kappa(kappa)
    if not is_bad_set(graph, vertex_set, kappa * kappa):
        raise ArgumentError(f"{vertex_set.sorted()} is not a {kappa * kappa}-bad set")

    if check_hypotheses:
        _check_hypotheses(graph, kappa, eps, cap)

    outside = graph.components_of(vertex_set.complement())
    absorbed = vertex_set
    for component in outside[1:]:
        absorbed = absorbed.union(component)

    if not graph.is_connected_set(absorbed):
        raise ConstructionFailure("connected", f"{absorbed.sorted()} is not connected")
    if not graph.is_connected_set(absorbed.complement()):
        raise ConstructionFailure("complement_connected", "the complement is not connected")

    report = graph.cut_report(absorbed)
    if not report.at_most_half:
        raise ConstructionFailure(
            "volume", f"volume {report.volume_in} exceeds half of {report.volume_total}"
        )
    original = graph.cut_report(vertex_set)
    # only edges towards the largest outside component still cross the cut
    if report.ratio > original.ratio or not report.below(kappa):
        raise ConstructionFailure(
            "ratio", f"ratio {report.ratio} is not below {kappa} (input ratio {original.ratio})"
        )
    return BadSetCertificate(set=absorbed, report=report, kappa=kappa, strong=True)


def _check_hypotheses(graph: Multigraph, kappa, eps, cap: Optional[int]):
    from expander_config import kappa_cap

    if eps is None:
        raise ArgumentError("eps is required to check the hypotheses")
    eps = positive_kappa(eps, "eps")
    if not kappa < kappa_cap(eps):
        raise ConstructionFailure(
            "hypothesis", f"kappa {kappa} is not below {kappa_cap(eps)} for eps {eps}"
        )
    if within_cap(graph, cap):
        strong = strongly_isolated_vertices_exact(graph, kappa, cap)
        if graph.volume(strong) > eps * graph.total_volume:
            raise ConstructionFailure(
                "hypothesis",
                f"strongly isolated volume {graph.volume(strong)} exceeds {eps} of {graph.total_volume}",
            )
