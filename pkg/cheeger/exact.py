"""
Exact oracles: Cheeger constant, bad sets, isolated vertices.

All of them enumerate connected vertex sets, which is exponential in the
number of vertices; graphs above the enumeration cap are refused with a
CapacityError instead of being approximated.
"""

from fractions import Fraction
from typing import Iterator, Optional, Tuple

from models import BadSetCertificate, CutReport, Multigraph, VertexSet, as_rational, ratio_below
from models.errors import ArgumentError, CapacityError, DegenerateGraphError

from .enumeration import iter_connected_sets


def resolve_cap(cap: Optional[int] = None) -> int:
    if cap is not None:
        if cap < 0:
            raise ArgumentError("the enumeration cap must be non-negative")
        return cap
    # Read lazily: expander_config imports the finders, which import this module
    from expander_config import ENUMERATION_CAP

    return ENUMERATION_CAP


def within_cap(graph: Multigraph, cap: Optional[int] = None) -> bool:
    return graph.vertex_count <= resolve_cap(cap)


def require_within_cap(graph: Multigraph, cap: Optional[int] = None) -> int:
    limit = resolve_cap(cap)
    if graph.vertex_count > limit:
        raise CapacityError(graph.vertex_count, limit)
    return limit


def positive_kappa(kappa, name: str = "kappa") -> Fraction:
    value = as_rational(kappa, name)
    if value <= 0:
        raise ArgumentError(f"{name} must be positive, got {value}")
    return value


def cheeger_exact(graph: Multigraph, cap: Optional[int] = None) -> Tuple[Fraction, VertexSet]:
    """
    Exact Cheeger constant and one minimizing set.

    Only connected sets are enumerated: a component of a minimizing set is
    itself admissible and has ratio no larger. Ties go to the smaller
    volume, then to the lexicographically smaller vertex list.
    """
    require_within_cap(graph, cap)
    if graph.edge_count == 0:
        raise DegenerateGraphError("the Cheeger constant of an edgeless graph is undefined")

    best = None
    best_key = None
    for mask, volume, boundary in iter_connected_sets(graph, graph.total_volume // 2):
        if best is not None:
            best_boundary, best_volume = best[1], best[2]
            # strictly worse ratio: skip without building the tie-break key
            if boundary * best_volume > best_boundary * volume:
                continue
        members = VertexSet.from_mask(mask, graph.vertex_count)
        key = (Fraction(boundary, volume), volume, members.sorted())
        if best_key is None or key < best_key:
            best, best_key = (members, boundary, volume), key

    if best is None:
        raise DegenerateGraphError("no vertex set has positive volume at most half the total")
    return best_key[0], best[0]


def cheeger_constant(graph: Multigraph, cap: Optional[int] = None) -> Fraction:
    return cheeger_exact(graph, cap)[0]


def is_bad_set(graph: Multigraph, vertex_set: VertexSet, kappa) -> bool:
    kappa = positive_kappa(kappa)
    report = graph.cut_report(vertex_set)
    return (
        report.at_most_half
        and report.below(kappa)
        and graph.is_connected_set(vertex_set)
    )


def is_strong_bad_set(graph: Multigraph, vertex_set: VertexSet, kappa) -> bool:
    return is_bad_set(graph, vertex_set, kappa) and graph.is_connected_set(
        vertex_set.complement()
    )


def certify_bad_set(
    graph: Multigraph, vertex_set: VertexSet, kappa
) -> Optional[BadSetCertificate]:
    """Certificate for vertex_set when it is a kappa-bad set, None otherwise (never raises on volume 0)"""
    kappa = positive_kappa(kappa)
    if not vertex_set or graph.volume(vertex_set) == 0:
        return None
    if not is_bad_set(graph, vertex_set, kappa):
        return None
    return BadSetCertificate(
        set=vertex_set,
        report=graph.cut_report(vertex_set),
        kappa=kappa,
        strong=graph.is_connected_set(vertex_set.complement()),
    )


def _iter_bad_masks(graph: Multigraph, kappa: Fraction, strong: bool) -> Iterator[Tuple[int, int, int]]:
    full = graph.full_mask
    for mask, volume, boundary in iter_connected_sets(graph, graph.total_volume // 2):
        if not ratio_below(boundary, volume, kappa):
            continue
        if strong and not graph.is_connected_mask(full & ~mask):
            continue
        yield mask, volume, boundary


def iter_bad_sets(
    graph: Multigraph, kappa, strong: bool = False, cap: Optional[int] = None
) -> Iterator[BadSetCertificate]:
    """Every kappa-bad set (only the strong ones when strong=True), in enumeration order"""
    kappa = positive_kappa(kappa)
    require_within_cap(graph, cap)
    full = graph.full_mask
    for mask, volume, boundary in _iter_bad_masks(graph, kappa, strong):
        yield BadSetCertificate(
            set=VertexSet.from_mask(mask, graph.vertex_count),
            report=CutReport(boundary, volume, graph.total_volume),
            kappa=kappa,
            strong=strong or graph.is_connected_mask(full & ~mask),
        )


def _union_of_bad_sets(graph: Multigraph, kappa, strong: bool, cap: Optional[int]) -> VertexSet:
    kappa = positive_kappa(kappa)
    require_within_cap(graph, cap)
    union = 0
    full = graph.full_mask
    for mask, _, _ in _iter_bad_masks(graph, kappa, strong):
        union |= mask
        if union == full:
            break
    return VertexSet.from_mask(union, graph.vertex_count)


def isolated_vertices_exact(graph: Multigraph, kappa, cap: Optional[int] = None) -> VertexSet:
    """Union of all kappa-bad sets"""
    return _union_of_bad_sets(graph, kappa, False, cap)


def strongly_isolated_vertices_exact(
    graph: Multigraph, kappa, cap: Optional[int] = None
) -> VertexSet:
    """Union of all strong kappa-bad sets"""
    return _union_of_bad_sets(graph, kappa, True, cap)


def is_expander(graph: Multigraph, kappa, cap: Optional[int] = None) -> bool:
    """True when no kappa-bad set exists; vacuously true without admissible sets"""
    kappa = positive_kappa(kappa)
    require_within_cap(graph, cap)
    return next(_iter_bad_masks(graph, kappa, False), None) is None


def check_certificate(graph: Multigraph, certificate: BadSetCertificate) -> bool:
    """Re-derive a certificate against graph; False on any mismatch"""
    if certificate.set.host_size != graph.vertex_count:
        return False
    try:
        if graph.cut_report(certificate.set) != certificate.report:
            return False
        if not is_bad_set(graph, certificate.set, certificate.kappa):
            return False
    except ArgumentError:
        return False
    if certificate.strong and not graph.is_connected_set(certificate.set.complement()):
        return False
    return True
