from .process import (
    ComponentPeel,
    check_removed_are_isolated,
    edge_lower_bound,
    find_bad_set,
    peel,
    peel_components,
    validate_eps,
    verify_peel,
)

__all__ = [
    "ComponentPeel",
    "check_removed_are_isolated",
    "edge_lower_bound",
    "find_bad_set",
    "peel",
    "peel_components",
    "validate_eps",
    "verify_peel",
]
