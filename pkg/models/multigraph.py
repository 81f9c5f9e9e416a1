from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from .errors import ArgumentError, DegenerateSetError

Edge = Tuple[int, int]


def ratio_below(boundary: int, volume: int, kappa: Fraction) -> bool:
    """boundary / volume < kappa, by cross-multiplication"""
    return boundary * kappa.denominator < kappa.numerator * volume


def as_rational(value, name: str = "value") -> Fraction:
    """Exact rational from a Fraction, int, "p/q" string or (p, q) pair; floats are refused"""
    if isinstance(value, bool) or isinstance(value, float):
        raise ArgumentError(f"{name} must be exact (use \"p/q\"), got {value!r}")
    try:
        if isinstance(value, (tuple, list)):
            return Fraction(int(value[0]), int(value[1]))
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError, IndexError) as e:
        raise ArgumentError(f"{name} is not a rational: {value!r}") from e


def at_most_half(volume: int, total: int) -> bool:
    return 2 * volume <= total


@dataclass(frozen=True)
class VertexSet:
    members: FrozenSet[int]
    host_size: int

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if self.host_size < 0:
            raise ArgumentError("host_size must be non-negative")
        for v in self.members:
            if not 0 <= v < self.host_size:
                raise IndexError(
                    f"vertex {v} out of range for a host of {self.host_size} vertices"
                )

    @classmethod
    def of(cls, vertices: Iterable[int], host_size: int) -> "VertexSet":
        return cls(frozenset(vertices), host_size)

    @classmethod
    def empty(cls, host_size: int) -> "VertexSet":
        return cls(frozenset(), host_size)

    @classmethod
    def full(cls, host_size: int) -> "VertexSet":
        return cls(frozenset(range(host_size)), host_size)

    @classmethod
    def from_mask(cls, mask: int, host_size: int) -> "VertexSet":
        return cls(frozenset(v for v in range(host_size) if mask >> v & 1), host_size)

    def _same_host(self, other: "VertexSet"):
        if other.host_size != self.host_size:
            raise ArgumentError(
                f"vertex sets index different hosts ({self.host_size} vs {other.host_size})"
            )

    def union(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.members | other.members, self.host_size)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.members - other.members, self.host_size)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.members & other.members, self.host_size)

    def complement(self) -> "VertexSet":
        return VertexSet(frozenset(range(self.host_size)) - self.members, self.host_size)

    def is_disjoint(self, other: "VertexSet") -> bool:
        self._same_host(other)
        return self.members.isdisjoint(other.members)

    def issubset(self, other: "VertexSet") -> bool:
        self._same_host(other)
        return self.members <= other.members

    def sorted(self) -> List[int]:
        return sorted(self.members)

    @property
    def mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __bool__(self) -> bool:
        return bool(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()}, host_size={self.host_size})"


@dataclass(frozen=True)
class CutReport:
    """Exact cut data of one set X in one graph G"""

    boundary: int
    volume_in: int
    volume_total: int

    def __post_init__(self):
        if self.volume_in <= 0:
            raise DegenerateSetError("cut ratio is undefined for a set of volume 0")
        if not 0 <= self.boundary <= self.volume_in:
            raise ArgumentError(
                f"boundary {self.boundary} must lie in [0, {self.volume_in}]"
            )
        if self.volume_in > self.volume_total:
            raise ArgumentError("set volume exceeds the total volume")

    @property
    def volume_out(self) -> int:
        return self.volume_total - self.volume_in

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.boundary, self.volume_in)

    @property
    def ratio_pair(self) -> Tuple[int, int]:
        return self.ratio.numerator, self.ratio.denominator

    @property
    def at_most_half(self) -> bool:
        return at_most_half(self.volume_in, self.volume_total)

    def below(self, kappa: Fraction) -> bool:
        return ratio_below(self.boundary, self.volume_in, kappa)

    def to_dict(self) -> dict:
        return {
            "boundary": self.boundary,
            "volume_in": self.volume_in,
            "volume_total": self.volume_total,
            "ratio": list(self.ratio_pair),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CutReport":
        return cls(
            boundary=int(data["boundary"]),
            volume_in=int(data["volume_in"]),
            volume_total=int(data["volume_total"]),
        )


class Multigraph:
    """
    Undirected multigraph with loops and parallel edges.

    Degrees follow the half-edge convention: a loop adds 2 to the degree of
    its vertex, so the total volume is always twice the number of edges.
    Instances are immutable; every derived graph is a new object.
    """

    __slots__ = (
        "_vertex_count",
        "_edges",
        "_labels",
        "_degrees",
        "_loops",
        "_adjacency",
        "_neighbor_masks",
    )

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[Sequence[object]] = None,
    ):
        if vertex_count < 0:
            raise ArgumentError("vertex_count must be non-negative")
        if labels is not None and len(labels) != vertex_count:
            raise ArgumentError("one label per vertex is required")

        normalized: List[Edge] = []
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            for endpoint in (u, v):
                if not 0 <= endpoint < vertex_count:
                    raise IndexError(
                        f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})"
                    )
            normalized.append((u, v) if u <= v else (v, u))

        degrees = [0] * vertex_count
        loops = [0] * vertex_count
        adjacency: List[Dict[int, int]] = [dict() for _ in range(vertex_count)]
        for u, v in normalized:
            degrees[u] += 1
            degrees[v] += 1
            if u == v:
                loops[u] += 1
            else:
                adjacency[u][v] = adjacency[u].get(v, 0) + 1
                adjacency[v][u] = adjacency[v].get(u, 0) + 1

        masks = []
        for neighbors in adjacency:
            mask = 0
            for w in neighbors:
                mask |= 1 << w
            masks.append(mask)

        self._vertex_count = vertex_count
        self._edges = tuple(normalized)
        self._labels = tuple(labels) if labels is not None else None
        self._degrees = tuple(degrees)
        self._loops = tuple(loops)
        self._adjacency = tuple(
            tuple(sorted(neighbors.items())) for neighbors in adjacency
        )
        self._neighbor_masks = tuple(masks)

    @classmethod
    def empty(cls) -> "Multigraph":
        return cls(0, ())

    # Basic accessors

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def labels(self) -> Optional[Tuple[object, ...]]:
        return self._labels

    @property
    def total_volume(self) -> int:
        return 2 * len(self._edges)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def vertices(self) -> VertexSet:
        return VertexSet.full(self._vertex_count)

    def _check_vertex(self, v: int):
        if not 0 <= v < self._vertex_count:
            raise IndexError(f"vertex {v} out of range [0, {self._vertex_count})")

    def _check_set(self, vertex_set: VertexSet):
        if vertex_set.host_size != self._vertex_count:
            raise ArgumentError(
                f"vertex set indexes {vertex_set.host_size} vertices, graph has {self._vertex_count}"
            )

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    def loop_count(self, v: int) -> int:
        self._check_vertex(v)
        return self._loops[v]

    def neighbors(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(neighbor, multiplicity) pairs, loops excluded"""
        self._check_vertex(v)
        return self._adjacency[v]

    def neighbor_mask(self, v: int) -> int:
        return self._neighbor_masks[v]

    # Cut arithmetic

    def volume(self, vertex_set: VertexSet) -> int:
        self._check_set(vertex_set)
        return sum(self._degrees[v] for v in vertex_set.members)

    def boundary(self, source: VertexSet, target: VertexSet) -> int:
        """Number of oriented edges starting in source and ending in target"""
        self._check_set(source)
        self._check_set(target)
        if not source.is_disjoint(target):
            raise ArgumentError("boundary needs disjoint vertex sets")
        count = 0
        for u in source.members:
            for w, multiplicity in self._adjacency[u]:
                if w in target.members:
                    count += multiplicity
        return count

    def cut_report(self, vertex_set: VertexSet) -> CutReport:
        volume_in = self.volume(vertex_set)
        if volume_in == 0:
            raise DegenerateSetError(
                f"set {vertex_set.sorted()} has volume 0, its cut ratio is undefined"
            )
        return CutReport(
            boundary=self.boundary(vertex_set, vertex_set.complement()),
            volume_in=volume_in,
            volume_total=self.total_volume,
        )

    # Structure

    def induced_subgraph(
        self, vertex_set: VertexSet
    ) -> Tuple["Multigraph", Tuple[int, ...]]:
        """
        Subgraph induced by vertex_set, relabeled to 0..k-1 in increasing order.

        Returns the subgraph and the map new index -> old index.
        """
        self._check_set(vertex_set)
        if not vertex_set:
            raise ArgumentError("cannot induce a subgraph on the empty set")
        old_of_new = tuple(vertex_set.sorted())
        new_of_old = {old: new for new, old in enumerate(old_of_new)}
        kept = [
            (new_of_old[u], new_of_old[v])
            for u, v in self._edges
            if u in new_of_old and v in new_of_old
        ]
        labels = None
        if self._labels is not None:
            labels = [self._labels[old] for old in old_of_new]
        return Multigraph(len(old_of_new), kept, labels), old_of_new

    def component_masks(self, allowed: int) -> List[int]:
        components = []
        remaining = allowed
        while remaining:
            low = remaining & -remaining
            component = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                v = bit.bit_length() - 1
                fresh = self._neighbor_masks[v] & allowed & ~component
                component |= fresh
                frontier |= fresh
            components.append(component)
            remaining &= ~component
        return components

    def is_connected_mask(self, mask: int) -> bool:
        return mask != 0 and len(self.component_masks(mask)) == 1

    @property
    def full_mask(self) -> int:
        return (1 << self._vertex_count) - 1

    def components_of(self, vertex_set: VertexSet) -> List[VertexSet]:
        """Connected components of the subgraph induced by vertex_set"""
        self._check_set(vertex_set)
        components = [
            VertexSet.from_mask(mask, self._vertex_count)
            for mask in self.component_masks(vertex_set.mask)
        ]
        components.sort(key=lambda c: (-self.volume(c), min(c.members)))
        return components

    def connected_components(self) -> List[VertexSet]:
        """Components by decreasing volume, ties broken by smallest vertex"""
        return self.components_of(self.vertices())

    def is_connected_set(self, vertex_set: VertexSet) -> bool:
        self._check_set(vertex_set)
        if not vertex_set:
            return False
        return len(self.component_masks(vertex_set.mask)) == 1

    def is_connected(self) -> bool:
        return self._vertex_count > 0 and self.is_connected_set(self.vertices())

    def to_networkx(self):
        """networkx.MultiGraph with the same vertices and edge multiset"""
        import networkx as nx

        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self._vertex_count))
        graph.add_edges_from(self._edges)
        return graph

    def canonical_edges(self) -> List[Edge]:
        return sorted(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self._vertex_count == other._vertex_count
            and self.canonical_edges() == other.canonical_edges()
        )

    def __hash__(self) -> int:
        return hash((self._vertex_count, tuple(self.canonical_edges())))

    def __repr__(self) -> str:
        return f"Multigraph(vertices={self._vertex_count}, edges={self.edge_count})"
