"""
Transfer of an expander from the dual map to the primal one.

Darts are shared by a map and its dual: dual vertex j is the j-th face of
the map, edge i is the i-th alpha-orbit in both. A dart's primal vertex is
its tail and its dual vertex is the face it bounds.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from cheeger import cheeger_exact, is_expander, positive_kappa, within_cap
from models import CombinatorialMap, GraphExtraction, MapSummary, Multigraph, VertexSet
from models.errors import (
    ArgumentError,
    DegenerateGraphError,
    HypothesisError,
    TheoremViolationError,
)


@dataclass(frozen=True)
class PrimalSubgraph:
    """Subgraph of the primal graph spanned by the edges dual to G*"""

    graph: Multigraph
    # local vertex -> vertex of the primal graph
    old_of_new: Tuple[int, ...]
    edge_ids: Tuple[int, ...]
    is_induced: bool


@dataclass(frozen=True)
class DualTransferInstance:
    map: CombinatorialMap
    # vertices of the dual map, i.e. faces of `map`
    dual_vertex_set: VertexSet
    kappa: Fraction
    eps: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "kappa", positive_kappa(self.kappa))
        if self.kappa > 1:
            raise ArgumentError(f"expansion constants never exceed 1, got kappa {self.kappa}")
        self.summary  # validates the map
        if self.dual_vertex_set.host_size != self.summary.faces:
            raise ArgumentError(
                f"dual vertex set indexes {self.dual_vertex_set.host_size} vertices, "
                f"the map has {self.summary.faces} faces"
            )
        if not self.dual_vertex_set:
            raise ArgumentError("the dual vertex set is empty")
        if self.eps is not None:
            object.__setattr__(self, "eps", positive_kappa(self.eps, "eps"))
            if self.dual_subgraph.edge_count < (1 - self.eps) * self.summary.edges:
                raise HypothesisError(
                    f"G* keeps {self.dual_subgraph.edge_count} of {self.summary.edges} edges, "
                    f"fewer than a {1 - self.eps} fraction"
                )

    @cached_property
    def summary(self) -> MapSummary:
        return self.map.validate()

    @cached_property
    def face_degree_bound(self) -> int:
        """D, always computed from the map"""
        return self.map.face_degree_bound()

    @cached_property
    def primal_extraction(self) -> GraphExtraction:
        return self.map.underlying_graph()

    @cached_property
    def dual_extraction(self) -> GraphExtraction:
        return self.map.dual().underlying_graph()

    @cached_property
    def _dual_induced(self) -> Tuple[Multigraph, Tuple[int, ...]]:
        return self.dual_extraction.graph.induced_subgraph(self.dual_vertex_set)

    @property
    def dual_subgraph(self) -> Multigraph:
        """G*, induced by dual_vertex_set and relabeled in increasing order"""
        return self._dual_induced[0]

    @property
    def dual_old_of_new(self) -> Tuple[int, ...]:
        return self._dual_induced[1]

    @cached_property
    def primal(self) -> PrimalSubgraph:
        return primal_from_dual(self)

    @cached_property
    def faces_at_vertex(self) -> Tuple[frozenset, ...]:
        """Faces of the map incident to each primal vertex"""
        incident = [set() for _ in range(self.primal_extraction.graph.vertex_count)]
        for dart, vertex in enumerate(self.primal_extraction.dart_to_vertex):
            incident[vertex].add(self.dual_extraction.dart_to_vertex[dart])
        return tuple(frozenset(faces) for faces in incident)


def primal_from_dual(inst: DualTransferInstance) -> PrimalSubgraph:
    """Primal edges whose dual edge has both endpoints in the dual vertex set"""
    face_of = inst.dual_extraction.dart_to_vertex
    kept = []
    for dart, partner in enumerate(inst.map.alpha):
        if dart < partner and face_of[dart] in inst.dual_vertex_set and face_of[partner] in inst.dual_vertex_set:
            kept.append(inst.primal_extraction.dart_to_edge[dart])

    primal = inst.primal_extraction.graph
    endpoints = sorted({v for e in kept for v in primal.edges[e]})
    new_of_old = {old: new for new, old in enumerate(endpoints)}
    graph = Multigraph(
        len(endpoints),
        [(new_of_old[primal.edges[e][0]], new_of_old[primal.edges[e][1]]) for e in kept],
    )
    if endpoints:
        induced, _ = primal.induced_subgraph(VertexSet.of(endpoints, primal.vertex_count))
        is_induced = induced.edge_count == graph.edge_count
    else:
        is_induced = True
    return PrimalSubgraph(graph, tuple(endpoints), tuple(kept), is_induced)


def _primal_ids(inst: DualTransferInstance, vertex_set: VertexSet) -> List[int]:
    if vertex_set.host_size != inst.primal.graph.vertex_count:
        raise ArgumentError("the vertex set does not index G")
    return [inst.primal.old_of_new[v] for v in vertex_set]


def face_closure(inst: DualTransferInstance, vertex_set: VertexSet) -> VertexSet:
    """X*: vertices of G* whose face is incident in the map to a vertex of X"""
    faces = set()
    for vertex in _primal_ids(inst, vertex_set):
        faces |= inst.faces_at_vertex[vertex]
    local_of = {old: new for new, old in enumerate(inst.dual_old_of_new)}
    return VertexSet.of(
        (local_of[f] for f in faces if f in local_of), inst.dual_subgraph.vertex_count
    )


def oriented_edge_injection(inst: DualTransferInstance, vertex_set: VertexSet) -> Dict[int, int]:
    """
    Oriented edges of G leaving a vertex of X, sent to oriented edges of G*
    leaving X*. Oriented edges are darts: the dart from x is sent to the same
    dart read in the dual, where it leaves the face it bounds.
    """
    members = set(_primal_ids(inst, vertex_set))
    in_g = set(inst.primal.edge_ids)
    tail = inst.primal_extraction.dart_to_vertex
    edge_of = inst.primal_extraction.dart_to_edge
    return {
        dart: dart
        for dart in range(inst.map.dart_count)
        if tail[dart] in members and edge_of[dart] in in_g
    }


def injection_is_valid(inst: DualTransferInstance, vertex_set: VertexSet, mapping: Dict[int, int]) -> bool:
    """Injective, sized vol_G(X), and landing on darts counted by vol_G*(X*)"""
    closure = {inst.dual_old_of_new[f] for f in face_closure(inst, vertex_set)}
    in_g_star = set(inst.primal.edge_ids)
    face_of = inst.dual_extraction.dart_to_vertex
    edge_of = inst.dual_extraction.dart_to_edge
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if len(images) != inst.primal.graph.volume(vertex_set):
        return False
    return all(face_of[d] in closure and edge_of[d] in in_g_star for d in images)


def _measure(inst: DualTransferInstance, vertex_set: VertexSet):
    graph = inst.primal.graph
    closure = face_closure(inst, vertex_set)
    dual = inst.dual_subgraph
    return (
        graph.volume(vertex_set),
        graph.boundary(vertex_set, vertex_set.complement()),
        dual.volume(closure),
        dual.boundary(closure, closure.complement()),
    )


def check_volume_lemma(inst: DualTransferInstance, vertex_set: VertexSet) -> bool:
    volume, _, dual_volume, _ = _measure(inst, vertex_set)
    return volume <= dual_volume


def check_outgoing_lemma(inst: DualTransferInstance, vertex_set: VertexSet) -> bool:
    """e_G(X, G-X) >= e_G*(X*, G*-X*) / 2D"""
    _, boundary, _, dual_boundary = _measure(inst, vertex_set)
    return 2 * inst.face_degree_bound * boundary >= dual_boundary


def small_boundary(inst: DualTransferInstance, boundary: int, volume: int) -> bool:
    """e_G(X, G-X) <= vol_G(X) / 4D"""
    return 4 * inst.face_degree_bound * boundary <= volume


def check_volume_cap_lemma(inst: DualTransferInstance, vertex_set: VertexSet) -> Optional[bool]:
    """
    vol_G*(X*) <= 3/2 vol_G(X) and vol_G*(X*) <= 3/4 vol(G*).

    None (not applicable) unless vol_G(X) <= vol_G(G-X) and the boundary of X
    is at most vol_G(X) / 4D.
    """
    volume, boundary, dual_volume, _ = _measure(inst, vertex_set)
    if 2 * volume > inst.primal.graph.total_volume or not small_boundary(inst, boundary, volume):
        return None
    return 2 * dual_volume <= 3 * volume and 4 * dual_volume <= 3 * inst.dual_subgraph.total_volume


@dataclass(frozen=True)
class LemmaBreakdown:
    vertex_set: VertexSet
    volume: int
    boundary: int
    dual_volume: int
    dual_boundary: int
    direct: bool
    volume_lemma: bool
    outgoing_lemma: bool
    volume_cap_lemma: Optional[bool]
    chained_bound: bool

    @property
    def holds(self) -> bool:
        """The case split: a large boundary, or every lemma together with the chained bound"""
        if self.direct:
            return True
        return self.volume_lemma and self.outgoing_lemma and bool(self.volume_cap_lemma) and self.chained_bound

    def to_dict(self) -> dict:
        return {
            "set": self.vertex_set.sorted(),
            "volume": self.volume,
            "boundary": self.boundary,
            "dual_volume": self.dual_volume,
            "dual_boundary": self.dual_boundary,
            "direct": self.direct,
            "volume_lemma": self.volume_lemma,
            "outgoing_lemma": self.outgoing_lemma,
            "volume_cap_lemma": self.volume_cap_lemma,
            "chained_bound": self.chained_bound,
            "holds": self.holds,
        }


def lemma_breakdown(inst: DualTransferInstance, vertex_set: VertexSet) -> LemmaBreakdown:
    volume, boundary, dual_volume, dual_boundary = _measure(inst, vertex_set)
    bound = inst.kappa / (8 * inst.face_degree_bound)
    return LemmaBreakdown(
        vertex_set=vertex_set,
        volume=volume,
        boundary=boundary,
        dual_volume=dual_volume,
        dual_boundary=dual_boundary,
        direct=4 * inst.face_degree_bound * boundary >= volume,
        volume_lemma=volume <= dual_volume,
        outgoing_lemma=2 * inst.face_degree_bound * boundary >= dual_boundary,
        volume_cap_lemma=check_volume_cap_lemma(inst, vertex_set),
        chained_bound=boundary * bound.denominator >= bound.numerator * volume,
    )


def admissible_subsets(graph: Multigraph) -> Iterator[VertexSet]:
    """Every X with vol(X) <= vol(G - X), the empty set included"""
    total = graph.total_volume
    degrees = graph.degrees
    for mask in range(1 << graph.vertex_count):
        volume = sum(degrees[v] for v in range(graph.vertex_count) if mask >> v & 1)
        if 2 * volume <= total:
            yield VertexSet.from_mask(mask, graph.vertex_count)


def sample_lemma_breakdowns(
    inst: DualTransferInstance, samples: int, seed: Optional[int] = None
) -> List[LemmaBreakdown]:
    """Breakdowns for random X (each vertex kept with probability 1/2, the lighter side of the cut)"""
    rng = np.random.default_rng(seed)
    graph = inst.primal.graph
    breakdowns = []
    for _ in range(samples):
        picks = rng.integers(0, 2, size=graph.vertex_count)
        vertex_set = VertexSet.of((v for v in range(graph.vertex_count) if picks[v]), graph.vertex_count)
        if 2 * graph.volume(vertex_set) > graph.total_volume:
            vertex_set = vertex_set.complement()
        breakdowns.append(lemma_breakdown(inst, vertex_set))
    return breakdowns


@dataclass(frozen=True)
class TransferResult:
    primal: PrimalSubgraph
    claimed_kappa: Fraction
    face_degree_bound: int
    # None: beyond the cap, taken on trust
    dual_verified: Optional[bool]
    # None: G beyond the cap or without edges
    verified: Optional[bool]
    cheeger: Optional[Fraction] = None
    breakdowns: Tuple[LemmaBreakdown, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "primal_vertices": self.primal.graph.vertex_count,
            "primal_edges": self.primal.graph.edge_count,
            "is_induced": self.primal.is_induced,
            "face_degree_bound": self.face_degree_bound,
            "claimed_kappa": f"{self.claimed_kappa.numerator}/{self.claimed_kappa.denominator}",
            "dual_verified": self.dual_verified,
            "verified": self.verified,
            "cheeger": None if self.cheeger is None else f"{self.cheeger.numerator}/{self.cheeger.denominator}",
            "breakdowns": [b.to_dict() for b in self.breakdowns],
        }


def transfer_expander(
    inst: DualTransferInstance,
    cap: Optional[int] = None,
    samples: int = 0,
    seed: Optional[int] = None,
) -> TransferResult:
    """
    G = primal_from_dual(inst) with the bound kappa / 8D.

    G* must be a kappa-expander: checked when within the cap (HypothesisError
    otherwise), trusted beyond it. When G is within the cap the bound is
    verified exactly and a failure raises TheoremViolationError.
    """
    dual = inst.dual_subgraph
    dual_verified = None
    if within_cap(dual, cap):
        if not is_expander(dual, inst.kappa, cap):
            raise HypothesisError(f"G* is not a {inst.kappa}-expander")
        dual_verified = True

    bound = inst.kappa / (8 * inst.face_degree_bound)
    graph = inst.primal.graph
    verified = None
    cheeger = None
    if graph.edge_count > 0 and within_cap(graph, cap):
        if not is_expander(graph, bound, cap):
            raise TheoremViolationError(f"G is not a {bound}-expander although G* is a {inst.kappa}-expander")
        verified = True
        try:
            cheeger = cheeger_exact(graph, cap)[0]
        except DegenerateGraphError:
            cheeger = None

    breakdowns = tuple(sample_lemma_breakdowns(inst, samples, seed)) if samples else ()
    return TransferResult(
        primal=inst.primal,
        claimed_kappa=bound,
        face_degree_bound=inst.face_degree_bound,
        dual_verified=dual_verified,
        verified=verified,
        cheeger=cheeger,
        breakdowns=breakdowns,
    )
