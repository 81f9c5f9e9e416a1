"""
JSON file formats for graphs, maps, peeling traces and certificates.

Graphs are written with edges in lexicographic order so that equal graphs
serialize to identical bytes. Every loader validates what it reads.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from models import (
    BadSetCertificate,
    CombinatorialMap,
    CutReport,
    Multigraph,
    PeelingStep,
    PeelingTrace,
    VertexSet,
)
from models.errors import ArgumentError

PathLike = Union[str, Path]


def _pair(value: Fraction):
    return [value.numerator, value.denominator]


def _fraction(pair) -> Fraction:
    try:
        return Fraction(int(pair[0]), int(pair[1]))
    except (TypeError, ValueError, IndexError, ZeroDivisionError) as e:
        raise ArgumentError(f"not a rational pair: {pair!r}") from e


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, separators=(", ", ": ")) + "\n"


def write_json(data: Dict[str, Any], path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(data))
    return path


def read_json(path: PathLike) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ArgumentError(f"{path} is not valid JSON: {e}") from e


# Graphs


def graph_to_dict(graph: Multigraph) -> Dict[str, Any]:
    return {
        "vertices": graph.vertex_count,
        "edges": [list(edge) for edge in graph.canonical_edges()],
    }


def graph_from_dict(data: Dict[str, Any]) -> Multigraph:
    try:
        vertices = int(data["vertices"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ArgumentError(f"malformed graph: {e}") from e
    try:
        return Multigraph(vertices, edges)
    except IndexError as e:
        raise ArgumentError(str(e)) from e


def canonical_graph_json(graph: Multigraph) -> str:
    return dumps(graph_to_dict(graph))


def write_graph(graph: Multigraph, path: PathLike) -> Path:
    return write_json(graph_to_dict(graph), path)


def read_graph(path: PathLike) -> Multigraph:
    return graph_from_dict(read_json(path))


# Maps


def map_to_dict(combinatorial_map: CombinatorialMap) -> Dict[str, Any]:
    return combinatorial_map.to_dict()


def map_from_dict(data: Dict[str, Any]) -> CombinatorialMap:
    """Raises MapValidationError when the permutations do not form a map"""
    try:
        darts = int(data["darts"])
        alpha, sigma, root = data["alpha"], data["sigma"], int(data.get("root", 0))
    except (KeyError, TypeError, ValueError) as e:
        raise ArgumentError(f"malformed map: {e}") from e
    if len(alpha) != darts or len(sigma) != darts:
        raise ArgumentError(f"map declares {darts} darts but lists {len(alpha)} and {len(sigma)}")
    loaded = CombinatorialMap(alpha, sigma, root)
    loaded.validate()
    return loaded


def write_map(combinatorial_map: CombinatorialMap, path: PathLike) -> Path:
    return write_json(map_to_dict(combinatorial_map), path)


def read_map(path: PathLike) -> CombinatorialMap:
    return map_from_dict(read_json(path))


# Certificates and traces


def certificate_to_dict(certificate: BadSetCertificate) -> Dict[str, Any]:
    return certificate.to_dict()


def certificate_from_dict(data: Dict[str, Any]) -> BadSetCertificate:
    try:
        return BadSetCertificate.from_dict(data)
    except (KeyError, TypeError, IndexError) as e:
        raise ArgumentError(f"malformed certificate: {e}") from e


def trace_to_dict(trace: PeelingTrace) -> Dict[str, Any]:
    return {
        "kappa_eps": _pair(trace.kappa_eps),
        "kappa": _pair(trace.kappa),
        "eps": _pair(trace.eps),
        "strategy": trace.strategy,
        "host_size": trace.host_size,
        "steps": [
            {
                "set": step.set.sorted(),
                "ratio": list(step.certificate.report.ratio_pair),
                "edges_remaining": step.edges_remaining,
                "local_set": step.certificate.set.sorted(),
                "local_size": step.certificate.set.host_size,
                "boundary": step.certificate.report.boundary,
                "volume_in": step.certificate.report.volume_in,
                "volume_total": step.certificate.report.volume_total,
                "strong": step.certificate.strong,
            }
            for step in trace.steps
        ],
        "final": trace.final_set.sorted(),
        "stranded": trace.stranded.sorted(),
    }


def trace_from_dict(data: Dict[str, Any]) -> PeelingTrace:
    try:
        host_size = int(data["host_size"])
        kappa = _fraction(data["kappa"])
        eps = _fraction(data["eps"])
        kappa_eps = (1 - eps) * kappa
        steps = []
        for step in data["steps"]:
            report = CutReport(int(step["boundary"]), int(step["volume_in"]), int(step["volume_total"]))
            certificate = BadSetCertificate(
                set=VertexSet.of(step["local_set"], int(step["local_size"])),
                report=report,
                kappa=kappa_eps,
                strong=bool(step.get("strong", False)),
            )
            steps.append(
                PeelingStep(
                    set=VertexSet.of(step["set"], host_size),
                    certificate=certificate,
                    edges_remaining=int(step["edges_remaining"]),
                )
            )
        return PeelingTrace(
            steps=tuple(steps),
            final_set=VertexSet.of(data["final"], host_size),
            kappa=kappa,
            eps=eps,
            strategy=data.get("strategy", "exact"),
            stranded=VertexSet.of(data.get("stranded", []), host_size),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ArgumentError(f"malformed trace: {e}") from e


def write_trace(trace: PeelingTrace, path: PathLike) -> Path:
    return write_json(trace_to_dict(trace), path)


def read_trace(path: PathLike) -> PeelingTrace:
    return trace_from_dict(read_json(path))
