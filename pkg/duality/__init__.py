from .transfer import (
    DualTransferInstance,
    LemmaBreakdown,
    PrimalSubgraph,
    TransferResult,
    admissible_subsets,
    check_outgoing_lemma,
    check_volume_cap_lemma,
    check_volume_lemma,
    face_closure,
    injection_is_valid,
    lemma_breakdown,
    oriented_edge_injection,
    primal_from_dual,
    sample_lemma_breakdowns,
    transfer_expander,
)

__all__ = [
    "DualTransferInstance",
    "LemmaBreakdown",
    "PrimalSubgraph",
    "TransferResult",
    "admissible_subsets",
    "check_outgoing_lemma",
    "check_volume_cap_lemma",
    "check_volume_lemma",
    "face_closure",
    "injection_is_valid",
    "lemma_breakdown",
    "oriented_edge_injection",
    "primal_from_dual",
    "sample_lemma_breakdowns",
    "transfer_expander",
]
