from .certificate import BadSetCertificate
from .combinatorial_map import (
    CombinatorialMap,
    GraphExtraction,
    MapSummary,
    find_rooted_isomorphism,
    permutation_cycles,
)
from .multigraph import (
    CutReport,
    Multigraph,
    VertexSet,
    as_rational,
    at_most_half,
    ratio_below,
)
from .trace import PeelingStep, PeelingTrace

__all__ = [
    "BadSetCertificate",
    "CombinatorialMap",
    "CutReport",
    "GraphExtraction",
    "MapSummary",
    "Multigraph",
    "PeelingStep",
    "PeelingTrace",
    "VertexSet",
    "as_rational",
    "at_most_half",
    "find_rooted_isomorphism",
    "permutation_cycles",
    "ratio_below",
]
