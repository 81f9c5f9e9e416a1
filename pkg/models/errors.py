"""
Error hierarchy shared by every package.

The CLI maps these onto exit codes (see expander_config.EXIT_CODES).
"""

from typing import Dict, Optional


class ExpanderError(Exception):
    """Base class for all library errors"""


class ArgumentError(ExpanderError, ValueError):
    """Invalid argument: overlapping sets, empty sets, bad rationals"""


class DegenerateSetError(ArgumentError):
    """A vertex set of volume 0 was given where a cut ratio is needed"""


class DegenerateGraphError(ArgumentError):
    """The graph has no edges, or no set with positive volume at most half the total"""


class ConfigError(ArgumentError):
    """Infeasible sampler or pipeline configuration"""


class HypothesisError(ArgumentError):
    """A hypothesis of a construction was checked and found false"""


class CapacityError(ExpanderError):
    """An exact oracle refused a graph above the enumeration cap"""

    def __init__(self, vertex_count: int, cap: int):
        self.vertex_count = vertex_count
        self.cap = cap
        super().__init__(
            f"exact oracle refused a graph with {vertex_count} vertices (cap is {cap})"
        )


class ConstructionFailure(ExpanderError):
    """The strong bad set built from a bad set failed one of its checks"""

    def __init__(self, clause: str, message: str):
        self.clause = clause
        super().__init__(f"construction failed on '{clause}': {message}")


class TraceValidationError(ExpanderError):
    """A peeling trace is malformed"""

    def __init__(self, step: int, message: str):
        self.step = step
        super().__init__(f"step {step}: {message}")


class MapValidationError(ExpanderError, ValueError):
    """A combinatorial map violates its invariants"""


class SamplingError(ExpanderError):
    """The sampler ran out of attempts"""

    def __init__(self, message: str, histogram: Optional[Dict[int, int]] = None):
        self.histogram = dict(histogram or {})
        super().__init__(message)


class TheoremViolationError(ExpanderError):
    """A bound that must hold was verified false"""
