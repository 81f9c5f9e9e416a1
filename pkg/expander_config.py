#!/usr/bin/env python3
"""
Centralized configuration for the expander-maps project.

This configuration is used by:
- the exact oracles (enumeration cap, read lazily to avoid import cycles)
- cli.py and the pipeline for defaults and exit codes
- the test framework for automatic per-strategy test generation
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

# Exact oracles refuse graphs with more vertices than this
ENUMERATION_CAP = 16

# Parallelism configuration
DEFAULT_MAX_WORKERS = 4  # Number of pipeline trials run at once

# Sampler
DEFAULT_MAX_ATTEMPTS = 10_000
HISTOGRAM_CHUNKS = 8  # seed-split streams per histogram

# Pipeline defaults
DEFAULT_EPS = Fraction(1, 8)
DEFAULT_KAPPA_GRID: Tuple[Fraction, ...] = (
    Fraction(1, 4),
    Fraction(1, 8),
    Fraction(1, 16),
    Fraction(1, 32),
)
DEFAULT_TRIALS = 1
FLIP_SWEEPS = 10  # flips per edge when mixing a genus-targeted triangulation
DEFAULT_BUDGET = 20_000  # candidate sets the isolation estimator may test
FACE_DEGREE_TRIANGULATION = 3

# Heuristic bad-set hunting
BALL_MAX_RADIUS = 4
SWEEP_ITERATIONS = 200

# On-disk oracle cache
DEFAULT_CACHE_DIR = ".cache"
CACHE_EXPIRY_HOURS = 24 * 7

EXIT_CODES = {
    "ok": 0,
    "error": 1,
    "config": 2,
    "capacity": 3,
    "sampling": 4,
}

from finders.exact import ExactFinder
from finders.ball_growing import BallGrowingFinder
from finders.sweep import SweepFinder


# All bad-set hunting strategies
STRATEGIES_CONFIG = [
    {
        "name": "exact",
        "finder_class": ExactFinder,
        "complete": True,
        "description": "Enumerate every connected set (refuses graphs over the cap)",
    },
    {
        "name": "ball_growing",
        "finder_class": BallGrowingFinder,
        "complete": False,
        "description": "Breadth-first balls around every vertex and their complements",
    },
    {
        "name": "sweep",
        "finder_class": SweepFinder,
        "complete": False,
        "description": "Prefix sweep along a second-eigenvector approximation",
    },
]

# "auto" routes to exact within the cap and to the heuristics above it
AUTO_STRATEGY = "auto"
HEURISTIC_CHAIN = ("ball_growing", "sweep")


def get_strategy_names() -> List[str]:
    """Get list of all registered strategy names"""
    return [strategy["name"] for strategy in STRATEGIES_CONFIG]


def get_strategy_config(name: str):
    """Get strategy configuration by name"""
    name_lower = name.lower()
    for strategy in STRATEGIES_CONFIG:
        if strategy["name"] == name_lower:
            return strategy
    return None


def make_finder(
    name: str,
    seed: Optional[int] = None,
    choice: str = "best",
    cap: Optional[int] = None,
):
    """Instantiate a registered finder, or the routed finder for "auto" """
    from finders import RoutedFinder

    if name == AUTO_STRATEGY:
        return RoutedFinder(
            exact=ExactFinder(cap=cap, seed=seed, choice=choice),
            heuristics=[make_finder(h, seed=seed) for h in HEURISTIC_CHAIN],
            cap=cap,
        )
    strategy = get_strategy_config(name)
    if strategy is None:
        from models.errors import ArgumentError

        raise ArgumentError(
            f"unknown strategy '{name}' (choose from {', '.join(get_strategy_names() + [AUTO_STRATEGY])})"
        )
    if strategy["finder_class"] is ExactFinder:
        return ExactFinder(cap=cap, seed=seed, choice=choice)
    return strategy["finder_class"](seed=seed)


def kappa_cap(eps: Fraction) -> Fraction:
    """Largest kappa_0 the strong-isolation step allows for this eps"""
    return min((1 - 2 * eps) / 3, 1 - 4 * eps)


def admissible_kappa_grid(
    eps: Fraction, grid: Iterable[Fraction] = DEFAULT_KAPPA_GRID
) -> List[Fraction]:
    cap = kappa_cap(eps)
    return [kappa for kappa in grid if 0 < kappa <= cap]
