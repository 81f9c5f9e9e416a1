from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MapValidationError
from .multigraph import Multigraph


def permutation_cycles(permutation: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cycles of a permutation, each starting at its smallest element, ordered by that element"""
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = permutation[d]
        cycles.append(tuple(cycle))
    return cycles


def _cycle_index(cycles: List[Tuple[int, ...]], size: int) -> Tuple[int, ...]:
    index = [0] * size
    for i, cycle in enumerate(cycles):
        for d in cycle:
            index[d] = i
    return tuple(index)


@dataclass(frozen=True)
class MapSummary:
    vertices: int
    edges: int
    faces: int
    genus: int
    face_degrees: Tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "genus": self.genus,
            "face_degrees": list(self.face_degrees),
        }


@dataclass(frozen=True)
class GraphExtraction:
    """Underlying multigraph of a map with its dart correspondences"""

    graph: Multigraph
    dart_to_edge: Tuple[int, ...]
    dart_to_vertex: Tuple[int, ...]


class CombinatorialMap:
    """
    Rooted map on darts 0..2E-1.

    alpha pairs the two darts of each edge, sigma rotates darts around their
    vertex, and faces are the cycles of phi = sigma o alpha (alpha applied
    first). Construction only checks shapes; validate() checks the map axioms.
    """

    __slots__ = ("_alpha", "_sigma", "_root", "_phi")

    def __init__(self, alpha: Sequence[int], sigma: Sequence[int], root: int = 0):
        if len(alpha) != len(sigma):
            raise MapValidationError(
                f"alpha has {len(alpha)} darts but sigma has {len(sigma)}"
            )
        self._alpha = tuple(int(d) for d in alpha)
        self._sigma = tuple(int(d) for d in sigma)
        self._root = int(root)
        for name, perm in (("alpha", self._alpha), ("sigma", self._sigma)):
            if sorted(perm) != list(range(len(perm))):
                raise MapValidationError(f"{name} is not a permutation of the darts")
        self._phi = tuple(self._sigma[self._alpha[d]] for d in range(len(self._alpha)))

    @classmethod
    def from_face_gluing(
        cls, phi: Sequence[int], alpha: Sequence[int], root: int = 0
    ) -> "CombinatorialMap":
        """Map whose faces are the cycles of phi, sides glued by alpha"""
        sigma = [phi[alpha[d]] for d in range(len(alpha))]
        return cls(alpha, sigma, root)

    @classmethod
    def from_oriented_faces(
        cls, faces: Sequence[Sequence[int]], root: int = 0
    ) -> "CombinatorialMap":
        """
        Map from polygons given as counterclockwise vertex sequences.

        Side u->v of one polygon is glued to side v->u of another; every
        oriented side must occur exactly once. Dart i is the i-th side read
        polygon by polygon, and its vertex is the side's tail.
        """
        sides: List[Tuple[int, int]] = []
        phi: List[int] = []
        for face in faces:
            start = len(sides)
            k = len(face)
            for i in range(k):
                sides.append((face[i], face[(i + 1) % k]))
                phi.append(start + (i + 1) % k)
        position: Dict[Tuple[int, int], int] = {}
        for d, side in enumerate(sides):
            if side in position:
                raise MapValidationError(f"oriented side {side} occurs twice")
            position[side] = d
        alpha = []
        for u, v in sides:
            if (v, u) not in position:
                raise MapValidationError(f"side {(u, v)} has no opposite side {(v, u)}")
            alpha.append(position[(v, u)])
        return cls.from_face_gluing(phi, alpha, root)

    # Accessors

    @property
    def dart_count(self) -> int:
        return len(self._alpha)

    @property
    def alpha(self) -> Tuple[int, ...]:
        return self._alpha

    @property
    def sigma(self) -> Tuple[int, ...]:
        return self._sigma

    @property
    def phi(self) -> Tuple[int, ...]:
        return self._phi

    @property
    def root(self) -> int:
        return self._root

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    def vertices(self) -> List[Tuple[int, ...]]:
        return permutation_cycles(self._sigma)

    def faces(self) -> List[Tuple[int, ...]]:
        return permutation_cycles(self._phi)

    def face_degrees(self) -> Tuple[int, ...]:
        return tuple(len(face) for face in self.faces())

    def face_degree_bound(self) -> int:
        return max(self.face_degrees(), default=0)

    def dart_to_face(self) -> Tuple[int, ...]:
        return _cycle_index(self.faces(), self.dart_count)

    def dart_to_vertex(self) -> Tuple[int, ...]:
        return _cycle_index(self.vertices(), self.dart_count)

    def root_vertex(self) -> int:
        return self.dart_to_vertex()[self._root]

    def root_face(self) -> int:
        """Index of the face to the right of the root, the phi-orbit of alpha(root)"""
        return self.dart_to_face()[self._alpha[self._root]]

    # Axioms

    def is_transitive(self) -> bool:
        if self.dart_count == 0:
            return False
        seen = [False] * self.dart_count
        seen[0] = True
        queue = deque([0])
        while queue:
            d = queue.popleft()
            for e in (self._alpha[d], self._sigma[d]):
                if not seen[e]:
                    seen[e] = True
                    queue.append(e)
        return all(seen)

    def validate(self) -> MapSummary:
        darts = self.dart_count
        if darts == 0 or darts % 2:
            raise MapValidationError(f"a map needs a positive even dart count, got {darts}")
        for d in range(darts):
            if self._alpha[d] == d:
                raise MapValidationError(f"alpha fixes dart {d}")
            if self._alpha[self._alpha[d]] != d:
                raise MapValidationError(f"alpha is not an involution at dart {d}")
        if not 0 <= self._root < darts:
            raise MapValidationError(f"root dart {self._root} out of range")
        if not self.is_transitive():
            raise MapValidationError("sigma and alpha do not act transitively on the darts")

        vertex_count = len(self.vertices())
        face_degrees = self.face_degrees()
        edges = darts // 2
        twice_genus = 2 - vertex_count + edges - len(face_degrees)
        if twice_genus < 0 or twice_genus % 2:
            raise MapValidationError(f"Euler's formula gives a non-integral genus ({twice_genus}/2)")
        return MapSummary(
            vertices=vertex_count,
            edges=edges,
            faces=len(face_degrees),
            genus=twice_genus // 2,
            face_degrees=tuple(sorted(face_degrees)),
        )

    def summary(self) -> MapSummary:
        return self.validate()

    @property
    def genus(self) -> int:
        return self.validate().genus

    def is_triangulation(self) -> bool:
        return all(degree == 3 for degree in self.face_degrees())

    # Derived maps

    def dual(self) -> "CombinatorialMap":
        """Same darts and root; the dual rotation is phi and alpha is unchanged"""
        return CombinatorialMap(self._alpha, self._phi, self._root)

    def underlying_graph(self) -> GraphExtraction:
        """
        One vertex per sigma-cycle, one edge per alpha-orbit.

        Edge i joins the vertices of the darts of the i-th alpha-orbit, orbits
        ordered by smallest dart; vertices follow the order of vertices().
        """
        dart_to_vertex = self.dart_to_vertex()
        dart_to_edge = [0] * self.dart_count
        edges = []
        for d in range(self.dart_count):
            partner = self._alpha[d]
            if d < partner:
                dart_to_edge[d] = dart_to_edge[partner] = len(edges)
                edges.append((dart_to_vertex[d], dart_to_vertex[partner]))
        graph = Multigraph(len(self.vertices()), edges)
        return GraphExtraction(graph, tuple(dart_to_edge), dart_to_vertex)

    def to_dict(self) -> dict:
        return {
            "darts": self.dart_count,
            "alpha": list(self._alpha),
            "sigma": list(self._sigma),
            "root": self._root,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombinatorialMap):
            return NotImplemented
        return (
            self._alpha == other._alpha
            and self._sigma == other._sigma
            and self._root == other._root
        )

    def __hash__(self) -> int:
        return hash((self._alpha, self._sigma, self._root))

    def __repr__(self) -> str:
        return f"CombinatorialMap(darts={self.dart_count}, root={self._root})"


def find_rooted_isomorphism(
    first: CombinatorialMap, second: CombinatorialMap
) -> Optional[Tuple[int, ...]]:
    """
    Root-preserving dart bijection f with f(alpha(d)) = alpha'(f(d)) and
    f(sigma(d)) = sigma'(f(d)), or None. Transitivity makes it unique.
    """
    if first.dart_count != second.dart_count or first.dart_count == 0:
        return None
    image: List[Optional[int]] = [None] * first.dart_count
    used = [False] * second.dart_count
    image[first.root] = second.root
    used[second.root] = True
    queue = deque([first.root])
    while queue:
        d = queue.popleft()
        for source, target in ((first.alpha, second.alpha), (first.sigma, second.sigma)):
            e, f = source[d], target[image[d]]
            if image[e] is None:
                if used[f]:
                    return None
                image[e] = f
                used[f] = True
                queue.append(e)
            elif image[e] != f:
                return None
    if any(i is None for i in image):
        return None
    return tuple(image)
