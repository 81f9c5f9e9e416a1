"""
Peeling: remove kappa_eps-bad sets one at a time until the remaining induced
subgraph has none left (or no edges), with kappa_eps = (1 - eps) kappa.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from cheeger import is_bad_set, is_expander, isolated_vertices_exact, positive_kappa, within_cap
from models import BadSetCertificate, Multigraph, PeelingStep, PeelingTrace, VertexSet, as_rational
from models.errors import ArgumentError, DegenerateSetError, TraceValidationError

# strategies whose final "no bad set" verdict comes from the exact oracle within the cap
EXACT_VERDICT_STRATEGIES = ("exact", "auto")


def validate_eps(eps) -> Fraction:
    eps = as_rational(eps, "eps")
    if not 0 < eps < Fraction(1, 2):
        raise ArgumentError(f"eps must lie strictly between 0 and 1/2, got {eps}")
    return eps


def find_bad_set(
    graph: Multigraph,
    kappa,
    strategy: str = "exact",
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> Optional[BadSetCertificate]:
    """One kappa-bad set found by the named strategy; None from "exact" means there is none"""
    from expander_config import make_finder

    return make_finder(strategy, seed=seed, cap=cap).find(graph, kappa)


def peel(
    graph: Multigraph,
    kappa,
    eps,
    strategy: str = "exact",
    seed: Optional[int] = None,
    choice: str = "best",
    cap: Optional[int] = None,
    finder=None,
) -> Tuple[Multigraph, PeelingTrace]:
    """
    Peel a connected graph.

    Returns the final induced subgraph (relabeled in increasing original
    order) and the trace. When the process runs out of edges the result is
    the empty graph and the leftover edgeless vertices go to trace.stranded.
    """
    kappa = positive_kappa(kappa)
    eps = validate_eps(eps)
    if not graph.is_connected():
        raise ArgumentError("peel needs a connected graph; use peel_components")
    if finder is None:
        from expander_config import make_finder

        finder = make_finder(strategy, seed=seed, choice=choice, cap=cap)

    kappa_eps = (1 - eps) * kappa
    current = graph
    survivors: Tuple[int, ...] = tuple(range(graph.vertex_count))
    steps: List[PeelingStep] = []

    while current.edge_count > 0:
        certificate = finder.find(current, kappa_eps)
        if certificate is None:
            break
        removed = VertexSet.of((survivors[v] for v in certificate.set), graph.vertex_count)
        current, kept = current.induced_subgraph(certificate.set.complement())
        survivors = tuple(survivors[v] for v in kept)
        steps.append(PeelingStep(set=removed, certificate=certificate, edges_remaining=current.edge_count))

    left = VertexSet.of(survivors, graph.vertex_count)
    if current.edge_count == 0:
        trace = PeelingTrace(
            steps=tuple(steps),
            final_set=VertexSet.empty(graph.vertex_count),
            kappa=kappa,
            eps=eps,
            strategy=finder.name,
            stranded=left,
        )
        return Multigraph.empty(), trace

    trace = PeelingTrace(
        steps=tuple(steps),
        final_set=left,
        kappa=kappa,
        eps=eps,
        strategy=finder.name,
    )
    return current, trace


@dataclass(frozen=True)
class ComponentPeel:
    """Peeling of one component; the trace indexes the component's own induced subgraph"""

    component: VertexSet
    old_of_new: Tuple[int, ...]
    result: Multigraph
    trace: PeelingTrace

    def final_in_host(self) -> VertexSet:
        return VertexSet.of(
            (self.old_of_new[v] for v in self.trace.final_set),
            self.component.host_size,
        )


def peel_components(
    graph: Multigraph,
    kappa,
    eps,
    strategy: str = "exact",
    seed: Optional[int] = None,
    choice: str = "best",
    cap: Optional[int] = None,
) -> List[ComponentPeel]:
    """Peel every connected component separately, volumes measured inside the component"""
    results = []
    for component in graph.connected_components():
        subgraph, old_of_new = graph.induced_subgraph(component)
        result, trace = peel(subgraph, kappa, eps, strategy=strategy, seed=seed, choice=choice, cap=cap)
        results.append(ComponentPeel(component, old_of_new, result, trace))
    return results


def edge_lower_bound(graph: Multigraph, trace: PeelingTrace) -> int:
    """#edges(G) minus the volumes in G of the removed sets"""
    return graph.edge_count - sum(graph.volume(step.set) for step in trace.steps)


def verify_peel(
    graph: Multigraph, trace: PeelingTrace, kappa, eps, cap: Optional[int] = None
) -> bool:
    """
    Replay a trace against graph.

    Structural defects (sets outside the surviving vertices, certificates
    indexing the wrong graph) raise TraceValidationError with the step
    number; a certificate or count that does not check out returns False.
    The final expander claim is rechecked only for exact verdicts within the cap.
    """
    kappa = positive_kappa(kappa)
    eps = validate_eps(eps)
    if trace.host_size != graph.vertex_count:
        raise TraceValidationError(0, f"trace indexes {trace.host_size} vertices, graph has {graph.vertex_count}")
    if trace.kappa != kappa or trace.eps != eps:
        return False
    kappa_eps = trace.kappa_eps

    current = graph
    survivors: Tuple[int, ...] = tuple(range(graph.vertex_count))
    for index, step in enumerate(trace.steps, start=1):
        local_of = {old: new for new, old in enumerate(survivors)}
        if not step.set or any(v not in local_of for v in step.set):
            raise TraceValidationError(index, "removed set is empty or leaves the surviving vertices")
        certificate = step.certificate
        if certificate.set.host_size != current.vertex_count:
            raise TraceValidationError(index, "certificate does not index the graph of this step")
        if certificate.set != VertexSet.of((local_of[v] for v in step.set), current.vertex_count):
            raise TraceValidationError(index, "certificate set and removed set disagree")

        if certificate.kappa != kappa_eps:
            return False
        try:
            if current.cut_report(certificate.set) != certificate.report:
                return False
            if not is_bad_set(current, certificate.set, kappa_eps):
                return False
        except DegenerateSetError:
            return False
        # kappa_eps vol_G(S_i) >= kappa_eps vol_{G_{i-1}}(S_i) > e_{G_{i-1}}(S_i, rest)
        if not graph.volume(step.set) >= certificate.report.volume_in:
            return False

        current, kept = current.induced_subgraph(certificate.set.complement())
        survivors = tuple(survivors[v] for v in kept)
        if current.edge_count != step.edges_remaining:
            return False

    left = VertexSet.of(survivors, graph.vertex_count)
    if trace.final_set.union(trace.stranded) != left or not trace.final_set.is_disjoint(trace.stranded):
        raise TraceValidationError(len(trace.steps), "final and stranded vertices are not the survivors")
    if not _boundaries_decompose(graph, trace, left):
        return False

    if current.edge_count == 0:
        return not trace.final_set
    if trace.final_set != left:
        return False
    if trace.strategy in EXACT_VERDICT_STRATEGIES and within_cap(current, cap):
        return is_expander(current, kappa_eps, cap)
    return True


def _boundaries_decompose(graph: Multigraph, trace: PeelingTrace, left: VertexSet) -> bool:
    """
    e_{G_{i-1}}(S_i, rest) splits as the edges towards later sets plus the
    edges towards the survivors, all counted in G.
    """
    steps = trace.steps
    for i, step in enumerate(steps):
        later = sum(graph.boundary(step.set, other.set) for other in steps[i + 1:])
        towards_survivors = graph.boundary(step.set, left)
        if later + towards_survivors != step.certificate.report.boundary:
            return False
    return True


def check_removed_are_isolated(
    graph: Multigraph, trace: PeelingTrace, kappa_eps, cap: Optional[int] = None
) -> bool:
    """Every removed vertex is kappa_eps-isolated in the original graph"""
    return trace.removed.issubset(isolated_vertices_exact(graph, kappa_eps, cap))
