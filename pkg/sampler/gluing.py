"""
Random triangulations by gluing triangles.

The face permutation is fixed to 2n triangles (3t -> 3t+1 -> 3t+2 -> 3t);
the edge involution is a uniform perfect matching of the 6n sides, drawn
as numpy's permutation of the darts (PCG64 via default_rng) paired two by
two. Disconnected gluings are rejected and redrawn in full.

Uniform gluings concentrate near genus n/2, so a genus far below that is
out of reach by rejection. The "flips" model builds a triangulation of the
target genus directly (a fan-triangulated 4g-gon, then random vertex
insertions) and mixes it with random edge flips. Flips keep the genus and
the face count; the resulting distribution is not the uniform one.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from models import CombinatorialMap, as_rational
from models.errors import ArgumentError, ConfigError, SamplingError


def triangle_faces(n: int) -> List[int]:
    """phi for 2n triangles on darts 0..6n-1"""
    phi = []
    for t in range(2 * n):
        phi.extend((3 * t + 1, 3 * t + 2, 3 * t))
    return phi


def genus_of_triangulation(triangulation: CombinatorialMap) -> int:
    """From V - 3n + 2n = 2 - 2g; valid for connected gluings"""
    n = triangulation.dart_count // 6
    return (n + 2 - len(triangulation.vertices())) // 2


def max_genus(n: int) -> int:
    return (n + 1) // 2


def _check_n(n: int):
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")


SAMPLER_MODELS = ("gluing", "flips")


@dataclass(frozen=True)
class GluingConfig:
    n: int
    target_genus: Optional[int] = None
    seed: int = 0
    max_attempts: Optional[int] = None
    model: str = "gluing"

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"n must be at least 1, got {self.n}")
        if self.model not in SAMPLER_MODELS:
            raise ConfigError(f"model must be one of {SAMPLER_MODELS}, got '{self.model}'")
        if self.model == "flips" and self.target_genus is None:
            raise ConfigError("the flips model needs a target genus")
        if self.max_attempts is None:
            from expander_config import DEFAULT_MAX_ATTEMPTS

            object.__setattr__(self, "max_attempts", DEFAULT_MAX_ATTEMPTS)
        if self.max_attempts < 1:
            raise ConfigError("max_attempts must be positive")
        if self.target_genus is not None:
            if self.target_genus < 0:
                raise ConfigError("genus must be non-negative")
            if self.n < 2 * self.target_genus - 1:
                raise ConfigError(
                    f"no triangulation with {2 * self.n} faces has genus {self.target_genus} "
                    f"(needs n >= 2g - 1)"
                )

    @classmethod
    def from_theta(
        cls, n: int, theta, seed: int = 0, max_attempts: Optional[int] = None, model: str = "gluing"
    ) -> "GluingConfig":
        """Genus round(theta n), halves rounded up"""
        theta = as_rational(theta, "theta")
        if not 0 < theta < Fraction(1, 2):
            raise ConfigError(f"theta must lie strictly between 0 and 1/2, got {theta}")
        genus = int(theta * n + Fraction(1, 2))
        return cls(n=n, target_genus=genus, seed=seed, max_attempts=max_attempts, model=model)


def draw_gluing(n: int, rng: np.random.Generator) -> CombinatorialMap:
    """One gluing, connected or not; the root is dart 0"""
    _check_n(n)
    darts = rng.permutation(6 * n)
    alpha = [0] * (6 * n)
    for k in range(0, 6 * n, 2):
        a, b = int(darts[k]), int(darts[k + 1])
        alpha[a], alpha[b] = b, a
    return CombinatorialMap.from_face_gluing(triangle_faces(n), alpha, root=0)


def sample_gluing(
    n: int, seed: Optional[int] = None, max_attempts: Optional[int] = None, rng: Optional[np.random.Generator] = None
) -> CombinatorialMap:
    """A connected gluing of 2n triangles"""
    _check_n(n)
    if max_attempts is None:
        from expander_config import DEFAULT_MAX_ATTEMPTS

        max_attempts = DEFAULT_MAX_ATTEMPTS
    rng = rng if rng is not None else np.random.default_rng(seed)
    for _ in range(max_attempts):
        triangulation = draw_gluing(n, rng)
        if triangulation.is_transitive():
            return triangulation
    raise SamplingError(f"no connected gluing of {2 * n} triangles in {max_attempts} attempts")


def base_gluing(genus: int) -> List[int]:
    """
    Edge involution of the smallest triangulation of the given genus, on
    the faces of triangle_faces: two triangles forming a sphere, or the
    4g-gon a1 b1 a1' b1' ... ag bg ag' bg' fanned out from its first corner,
    which has one vertex and 4g - 2 triangles.
    """
    if genus < 0:
        raise ArgumentError(f"genus must be non-negative, got {genus}")
    if genus == 0:
        return [3, 5, 4, 0, 2, 1]
    sides = 4 * genus
    triangles = sides - 2
    alpha = [-1] * (3 * triangles)

    def side(i: int) -> int:
        if i == 0:
            return 0
        if i == sides - 1:
            return 3 * (triangles - 1) + 2
        return 3 * (i - 1) + 1

    # fan diagonals: the closing side of triangle j against the opening side of j + 1
    for j in range(triangles - 1):
        alpha[3 * j + 2], alpha[3 * j + 3] = 3 * j + 3, 3 * j + 2
    for k in range(genus):
        for first, second in ((4 * k, 4 * k + 2), (4 * k + 1, 4 * k + 3)):
            a, b = side(first), side(second)
            alpha[a], alpha[b] = b, a
    return alpha


def _reglue(alpha: List[int], old: Dict[int, int], new_pos: Dict[int, int]):
    """Move the darts of new_pos and keep each glued to its (possibly moved) partner"""
    for dart, position in new_pos.items():
        partner = new_pos.get(old[dart], old[dart])
        alpha[position], alpha[partner] = partner, position


def subdivide_triangle(alpha: List[int], triangle: int):
    """Insert a degree-3 vertex into a triangle; two triangles are appended"""
    x, y, z = 3 * triangle, 3 * triangle + 1, 3 * triangle + 2
    a = len(alpha) // 3
    b = a + 1
    alpha.extend([-1] * 6)
    old = {d: alpha[d] for d in (x, y, z)}
    _reglue(alpha, old, {x: x, y: 3 * a, z: 3 * b})
    for u, v in ((y, 3 * a + 2), (3 * a + 1, 3 * b + 2), (3 * b + 1, z)):
        alpha[u], alpha[v] = v, u


def flip_edge(alpha: List[int], dart: int) -> bool:
    """
    Replace the edge of dart by the other diagonal of the quadrilateral it
    splits. False, and nothing changes, when both sides of the edge lie in
    one triangle.
    """
    mate = alpha[dart]
    td, te = 3 * (dart // 3), 3 * (mate // 3)
    if td == te:
        return False
    d1, d2 = td + (dart - td + 1) % 3, td + (dart - td + 2) % 3
    e1, e2 = te + (mate - te + 1) % 3, te + (mate - te + 2) % 3
    old = {d: alpha[d] for d in (d1, d2, e1, e2)}
    alpha[td], alpha[te] = te, td
    _reglue(alpha, old, {e2: td + 1, d1: td + 2, d2: te + 1, e1: te + 2})
    return True


def flip_triangulation(
    n: int, genus: int, rng: np.random.Generator, sweeps: Optional[int] = None
) -> CombinatorialMap:
    """Connected triangulation with 2n faces and the given genus, flip-mixed"""
    if sweeps is None:
        from expander_config import FLIP_SWEEPS

        sweeps = FLIP_SWEEPS
    smallest = 1 if genus == 0 else 2 * genus - 1
    if n < smallest:
        raise ConfigError(f"no triangulation with {2 * n} faces has genus {genus}")
    alpha = base_gluing(genus)
    for _ in range(n - smallest):
        subdivide_triangle(alpha, int(rng.integers(len(alpha) // 3)))
    for dart in rng.integers(6 * n, size=sweeps * 3 * n):
        flip_edge(alpha, int(dart))
    return CombinatorialMap.from_face_gluing(triangle_faces(n), alpha, root=0)


def sample_triangulation(cfg: GluingConfig) -> CombinatorialMap:
    """
    Rejection-sample connected gluings until the genus matches the target,
    or build one with the flips model.
    """
    rng = np.random.default_rng(cfg.seed)
    if cfg.model == "flips":
        return flip_triangulation(cfg.n, cfg.target_genus, rng)
    histogram: Counter = Counter()
    for _ in range(cfg.max_attempts):
        triangulation = draw_gluing(cfg.n, rng)
        if not triangulation.is_transitive():
            continue
        genus = genus_of_triangulation(triangulation)
        histogram[genus] += 1
        if cfg.target_genus is None or genus == cfg.target_genus:
            return triangulation
    raise SamplingError(
        f"no genus-{cfg.target_genus} triangulation with {2 * cfg.n} faces in {cfg.max_attempts} attempts",
        histogram=dict(histogram),
    )


def _histogram_chunk(task: Tuple[int, int, np.random.SeedSequence]) -> Dict[int, int]:
    n, trials, seed_sequence = task
    rng = np.random.default_rng(seed_sequence)
    counts: Counter = Counter()
    for _ in range(trials):
        triangulation = draw_gluing(n, rng)
        if triangulation.is_transitive():
            counts[genus_of_triangulation(triangulation)] += 1
    return dict(counts)


def genus_histogram(
    n: int,
    trials: int,
    seed: int = 0,
    chunks: Optional[int] = None,
    max_workers: int = 1,
) -> Dict[int, int]:
    """
    Genus counts over `trials` draws, disconnected draws left out.

    Draws are split into chunks with independent streams spawned from the
    seed, so the result depends on (n, trials, seed, chunks) only, never on
    the number of workers.
    """
    _check_n(n)
    if trials < 1:
        raise ArgumentError("trials must be at least 1")
    if chunks is None:
        from expander_config import HISTOGRAM_CHUNKS

        chunks = HISTOGRAM_CHUNKS
    chunks = max(1, min(chunks, trials))
    streams = np.random.SeedSequence(seed).spawn(chunks)
    sizes = [trials // chunks + (1 if i < trials % chunks else 0) for i in range(chunks)]
    tasks = [(n, size, stream) for size, stream in zip(sizes, streams)]

    from utils.parallel import ParallelRunner

    partials = ParallelRunner(max_workers=max_workers, description=f"Gluing {2 * n} triangles").map(
        _histogram_chunk, tasks
    )
    merged: Counter = Counter()
    for partial in partials:
        merged.update(partial)
    return dict(sorted(merged.items()))


def enumerate_gluings(n: int) -> Iterator[Tuple[int, ...]]:
    """Every fixed-point-free involution on 6n darts, as image tuples"""
    _check_n(n)
    size = 6 * n
    alpha = [-1] * size

    def pair_from(first_free: int):
        while first_free < size and alpha[first_free] != -1:
            first_free += 1
        if first_free == size:
            yield tuple(alpha)
            return
        for partner in range(first_free + 1, size):
            if alpha[partner] == -1:
                alpha[first_free], alpha[partner] = partner, first_free
                yield from pair_from(first_free + 1)
                alpha[first_free] = alpha[partner] = -1

    yield from pair_from(0)


def exact_genus_distribution(n: int) -> Tuple[Dict[int, int], int]:
    """
    Genus counts over all (6n-1)!! gluings, and the number of disconnected
    ones. Exhaustive: meant for n <= 2.
    """
    phi = triangle_faces(n)
    counts: Counter = Counter()
    disconnected = 0
    for alpha in enumerate_gluings(n):
        triangulation = CombinatorialMap.from_face_gluing(phi, alpha, root=0)
        if triangulation.is_transitive():
            counts[genus_of_triangulation(triangulation)] += 1
        else:
            disconnected += 1
    return dict(sorted(counts.items())), disconnected
