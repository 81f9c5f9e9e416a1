from .enumeration import iter_connected_sets
from .exact import (
    certify_bad_set,
    check_certificate,
    cheeger_constant,
    cheeger_exact,
    is_bad_set,
    is_expander,
    is_strong_bad_set,
    isolated_vertices_exact,
    iter_bad_sets,
    positive_kappa,
    require_within_cap,
    resolve_cap,
    strongly_isolated_vertices_exact,
    within_cap,
)
from .lemma import strengthen_bad_set

__all__ = [
    "certify_bad_set",
    "check_certificate",
    "cheeger_constant",
    "cheeger_exact",
    "is_bad_set",
    "is_expander",
    "is_strong_bad_set",
    "isolated_vertices_exact",
    "iter_bad_sets",
    "iter_connected_sets",
    "positive_kappa",
    "require_within_cap",
    "resolve_cap",
    "strengthen_bad_set",
    "strongly_isolated_vertices_exact",
    "within_cap",
]
