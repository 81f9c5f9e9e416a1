from .cache import OracleCache
from .formats import (
    canonical_graph_json,
    certificate_from_dict,
    certificate_to_dict,
    graph_from_dict,
    graph_to_dict,
    map_from_dict,
    map_to_dict,
    read_graph,
    read_json,
    read_map,
    read_trace,
    trace_from_dict,
    trace_to_dict,
    write_graph,
    write_json,
    write_map,
    write_trace,
)

__all__ = [
    "OracleCache",
    "canonical_graph_json",
    "certificate_from_dict",
    "certificate_to_dict",
    "graph_from_dict",
    "graph_to_dict",
    "map_from_dict",
    "map_to_dict",
    "read_graph",
    "read_json",
    "read_map",
    "read_trace",
    "trace_from_dict",
    "trace_to_dict",
    "write_graph",
    "write_json",
    "write_map",
    "write_trace",
]
