from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .certificate import BadSetCertificate
from .multigraph import VertexSet


@dataclass(frozen=True)
class PeelingStep:
    # S_i in the indices of the original graph
    set: VertexSet
    # measured in G_{i-1}, whose vertices are the survivors in increasing order
    certificate: BadSetCertificate
    edges_remaining: int


@dataclass(frozen=True)
class PeelingTrace:
    steps: Tuple[PeelingStep, ...]
    final_set: VertexSet
    kappa: Fraction
    eps: Fraction
    strategy: str = "exact"
    # vertices left without edges once the process exhausted the graph
    stranded: VertexSet = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.stranded is None:
            object.__setattr__(self, "stranded", VertexSet.empty(self.final_set.host_size))

    @property
    def kappa_eps(self) -> Fraction:
        return (1 - self.eps) * self.kappa

    @property
    def tau(self) -> int:
        return len(self.steps)

    @property
    def host_size(self) -> int:
        return self.final_set.host_size

    @property
    def removed(self) -> VertexSet:
        removed = VertexSet.empty(self.host_size)
        for step in self.steps:
            removed = removed.union(step.set)
        return removed

    @property
    def exhausted(self) -> bool:
        """True when the process consumed every edge"""
        return not self.final_set

