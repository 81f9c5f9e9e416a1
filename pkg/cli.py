#!/usr/bin/env python3
"""
Command line interface for expander-maps

Samples random triangulations, computes exact Cheeger constants and
isolated vertices, peels bad sets, transfers dual expanders to the primal
map and runs the whole experiment pipeline.
"""

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from cheeger import cheeger_exact, require_within_cap, within_cap
from duality import DualTransferInstance, transfer_expander
from expander_config import (
    AUTO_STRATEGY,
    DEFAULT_EPS,
    DEFAULT_MAX_WORKERS,
    DEFAULT_TRIALS,
    EXIT_CODES,
    get_strategy_names,
)
from harness import PipelineConfig, emit_report, estimate_isolated_volume, run_pipeline
from harness.report import REPORT_FORMATS, format_rational
from models import Multigraph, VertexSet, as_rational
from models.errors import (
    ArgumentError,
    CapacityError,
    ExpanderError,
    MapValidationError,
    SamplingError,
)
from peeling import peel_components, verify_peel
from sampler import SAMPLER_MODELS, GluingConfig, genus_histogram, sample_triangulation
from storage import (
    OracleCache,
    certificate_to_dict,
    graph_from_dict,
    map_from_dict,
    read_json,
    read_map,
    read_trace,
    trace_to_dict,
    write_graph,
    write_json,
    write_map,
)
from ui import Terminal


def rational(text: str) -> Fraction:
    """argparse type for exact rationals such as 1/8 or 0.125"""
    try:
        return as_rational(text)
    except ArgumentError as e:
        raise argparse.ArgumentTypeError(str(e))


def load_graph(path: str, dual: bool = False) -> Multigraph:
    """A graph file, or the underlying graph of a map file (of its dual with dual=True)"""
    data = read_json(path)
    if "darts" in data:
        combinatorial_map = map_from_dict(data)
        if dual:
            combinatorial_map = combinatorial_map.dual()
        return combinatorial_map.underlying_graph().graph
    if dual:
        raise ArgumentError(f"{path} holds a graph, --dual needs a map")
    return graph_from_dict(data)


def get_cache(args) -> Optional[OracleCache]:
    return None if args.no_cache else OracleCache()


def cmd_sample(args, terminal: Terminal):
    """Sample one connected triangulation, or a genus histogram with --histogram"""
    if args.histogram:
        histogram = genus_histogram(args.n, args.histogram, seed=args.seed, max_workers=args.workers)
        terminal.display_histogram(histogram, title=f"Genus of {args.histogram} gluings of {2 * args.n} triangles")
        if args.out:
            write_json({"n": args.n, "trials": args.histogram, "seed": args.seed, "histogram": histogram}, args.out)
            terminal.show_success(f"Histogram written to {args.out}")
        return

    if args.theta is not None:
        cfg = GluingConfig.from_theta(
            args.n, args.theta, seed=args.seed, max_attempts=args.max_attempts, model=args.model
        )
    else:
        cfg = GluingConfig(
            args.n, target_genus=args.genus, seed=args.seed, max_attempts=args.max_attempts, model=args.model
        )
    triangulation = sample_triangulation(cfg)
    terminal.display_map_summary(triangulation.summary(), title=f"Triangulation (seed {args.seed})")
    if args.out:
        write_map(triangulation, args.out)
        terminal.show_success(f"Map written to {args.out}")


def cmd_dualize(args, terminal: Terminal):
    combinatorial_map = read_map(args.map)
    dual = combinatorial_map.dual()
    terminal.display_map_summary(dual.summary(), title="Dual map")
    if args.out:
        if args.graph:
            write_graph(dual.underlying_graph().graph, args.out)
        else:
            write_map(dual, args.out)
        terminal.show_success(f"Dual written to {args.out}")


def cmd_cheeger(args, terminal: Terminal):
    graph = load_graph(args.graph, dual=args.dual)
    # the cap applies to cached answers too
    require_within_cap(graph, args.cap)
    cache = get_cache(args)
    cached = cache.get(graph, "cheeger") if cache else None
    if cached is not None:
        value = Fraction(cached["value"])
        argmin = VertexSet.of(cached["set"], graph.vertex_count)
        terminal.show_info("Using cached result")
    else:
        value, argmin = cheeger_exact(graph, args.cap)
        if cache:
            cache.set(graph, "cheeger", {"value": format_rational(value), "set": argmin.sorted()})

    terminal.display_cut_report(argmin, graph.cut_report(argmin), title=f"h(G) = {value}")
    if args.out:
        write_json({"cheeger": format_rational(value), "set": argmin.sorted()}, args.out)


def cmd_isolated(args, terminal: Terminal):
    graph = load_graph(args.graph, dual=args.dual)
    query = f"isolated:{format_rational(args.kappa)}:{'strong' if args.strong else 'any'}"
    cache = get_cache(args) if within_cap(graph, args.cap) else None
    cached = cache.get(graph, query) if cache else None
    if cached is not None:
        union = VertexSet.of(cached["set"], graph.vertex_count)
        exact = True
        terminal.show_info("Using cached result")
    else:
        estimate = estimate_isolated_volume(
            graph, args.kappa, budget=args.budget, strong=args.strong, cap=args.cap, seed=args.seed
        )
        union, exact = estimate.union, estimate.exact
        if cache:
            cache.set(graph, query, {"set": union.sorted()})

    label = "Strongly isolated" if args.strong else "Isolated"
    terminal.display_vertex_set(label, union, graph.volume(union), graph.total_volume)
    if not exact:
        terminal.show_warning("Heuristic lower bound: the graph is above the enumeration cap")
    if args.out:
        write_json(
            {
                "kappa": format_rational(args.kappa),
                "strong": args.strong,
                "exact": exact,
                "set": union.sorted(),
                "volume": graph.volume(union),
            },
            args.out,
        )


def cmd_peel(args, terminal: Terminal):
    graph = load_graph(args.graph, dual=args.dual)
    peels = peel_components(
        graph, args.kappa, args.eps, strategy=args.strategy, seed=args.seed, choice=args.choice, cap=args.cap
    )
    for part in peels:
        subgraph, _ = graph.induced_subgraph(part.component)
        terminal.display_trace(part.trace, subgraph.edge_count)
        if args.verify:
            if verify_peel(subgraph, part.trace, args.kappa, args.eps, args.cap):
                terminal.show_success("Trace verified")
            else:
                terminal.show_error("Trace failed verification")

    if args.out:
        if len(peels) == 1:
            write_json(trace_to_dict(peels[0].trace), args.out)
        else:
            write_json(
                {"components": [{"vertices": list(p.old_of_new), "trace": trace_to_dict(p.trace)} for p in peels]},
                args.out,
            )
        terminal.show_success(f"Trace written to {args.out}")
    if args.emit_certificates:
        certificates = [certificate_to_dict(step.certificate) for p in peels for step in p.trace.steps]
        write_json({"certificates": certificates}, args.emit_certificates)
        terminal.show_success(f"{len(certificates)} certificates written to {args.emit_certificates}")


def cmd_transfer(args, terminal: Terminal):
    combinatorial_map = read_map(args.map)
    faces = len(combinatorial_map.faces())
    if args.trace:
        trace = read_trace(args.trace)
        dual_set, kappa = trace.final_set, trace.kappa_eps
    else:
        if args.faces is None or args.kappa is None:
            raise ArgumentError("give --trace, or --faces with --kappa")
        dual_set = VertexSet.of((int(f) for f in args.faces.split(",") if f.strip()), faces)
        kappa = args.kappa

    instance = DualTransferInstance(combinatorial_map, dual_set, kappa)
    result = transfer_expander(instance, cap=args.cap, samples=args.samples, seed=args.seed)
    terminal.display_transfer(result)
    if args.out:
        write_json(result.to_dict(), args.out)
        terminal.show_success(f"Transfer report written to {args.out}")


def cmd_pipeline(args, terminal: Terminal):
    cfg = PipelineConfig(
        n=args.n,
        theta=args.theta,
        genus=args.genus,
        kappa=args.kappa,
        eps=args.eps,
        seed=args.seed,
        strategy=args.strategy,
        trials=args.trials,
        budget=args.budget,
        output=args.out,
        format=args.format,
        max_workers=args.workers,
        cap=args.cap,
        max_attempts=args.max_attempts,
        model=args.model,
    )
    terminal.show_header(f"Pipeline: n = {cfg.n}, {cfg.trials} trials, eps = {cfg.eps}")
    report = run_pipeline(cfg, show_progress=cfg.trials > 1)
    terminal.display_pipeline_report(report)

    failures = [r for r in report.records if r.error]
    if failures:
        terminal.show_warning(f"{len(failures)} of {len(report.records)} rows recorded an error")
    if args.out:
        emit_report(report, args.out, args.format)
        terminal.show_success(f"Report written to {args.out}")


COMMANDS = {
    "sample": cmd_sample,
    "dualize": cmd_dualize,
    "cheeger": cmd_cheeger,
    "isolated": cmd_isolated,
    "peel": cmd_peel,
    "transfer": cmd_transfer,
    "pipeline": cmd_pipeline,
}


def add_genus_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="Half the number of triangles")
    genus = parser.add_mutually_exclusive_group()
    genus.add_argument("--genus", type=int, help="Target genus (rejection sampling)")
    genus.add_argument("--theta", type=rational, help="Target genus round(theta * n), theta in (0, 1/2)")
    parser.add_argument("--max-attempts", type=int, help="Gluings drawn before giving up")
    parser.add_argument(
        "--model",
        choices=SAMPLER_MODELS,
        default="gluing",
        help="gluing: uniform gluings, rejected on genus; flips: genus-targeted and flip-mixed (not uniform)",
    )


def setup_parser():
    """Set up command line argument parser"""
    parser = argparse.ArgumentParser(
        prog="expanders",
        description="expander-maps - expander subgraphs of random high-genus triangulations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s --seed 7 --out t.json sample --n 20 --genus 5   # Sample a triangulation
  %(prog)s sample --n 2 --histogram 100000                 # Genus histogram of gluings
  %(prog)s --out d.json dualize t.json                     # Dual map
  %(prog)s cheeger graph.json                              # Exact Cheeger constant
  %(prog)s isolated t.json --dual --kappa 1/4 --strong     # Strongly isolated dual vertices
  %(prog)s --out trace.json peel t.json --dual --kappa 1/16 --eps 1/8
  %(prog)s transfer t.json --trace trace.json              # Primal expander from a peeled dual
  %(prog)s --format csv --out r.csv pipeline --n 500 --theta 1/10 --trials 20 --strategy sweep

Rationals are exact: write 1/8 or 0.125, never a float approximation.
        """,
    )
    parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    parser.add_argument("--out", metavar="PATH", help="Write the command's result to PATH")
    parser.add_argument("--format", choices=REPORT_FORMATS, default="json", help="Pipeline report format")
    parser.add_argument("--cap", type=int, help="Largest vertex count the exact oracles accept")
    parser.add_argument("--no-cache", action="store_true", help="Bypass the on-disk oracle cache")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    strategies = get_strategy_names() + [AUTO_STRATEGY]

    # Sample command
    sample_parser = subparsers.add_parser("sample", help="Sample a random connected triangulation")
    add_genus_arguments(sample_parser)
    sample_parser.add_argument("--histogram", type=int, metavar="TRIALS", help="Draw TRIALS gluings and count genera")
    sample_parser.add_argument("--workers", type=int, default=1, help="Worker processes for --histogram")

    # Dualize command
    dualize_parser = subparsers.add_parser("dualize", help="Dual of a map file")
    dualize_parser.add_argument("map", help="Map JSON file")
    dualize_parser.add_argument("--graph", action="store_true", help="Write the dual's underlying graph instead")

    # Oracle commands
    cheeger_parser = subparsers.add_parser("cheeger", help="Exact Cheeger constant and a minimizing set")
    cheeger_parser.add_argument("graph", help="Graph or map JSON file")
    cheeger_parser.add_argument("--dual", action="store_true", help="Use the dual of a map file")

    isolated_parser = subparsers.add_parser("isolated", help="Vertices lying in some kappa-bad set")
    isolated_parser.add_argument("graph", help="Graph or map JSON file")
    isolated_parser.add_argument("--dual", action="store_true", help="Use the dual of a map file")
    isolated_parser.add_argument("--kappa", type=rational, required=True)
    isolated_parser.add_argument("--strong", action="store_true", help="Only strong bad sets")
    isolated_parser.add_argument("--budget", type=int, help="Candidate cuts per heuristic above the cap")

    # Peel command
    peel_parser = subparsers.add_parser("peel", help="Remove (1 - eps) kappa-bad sets until none is left")
    peel_parser.add_argument("graph", help="Graph or map JSON file")
    peel_parser.add_argument("--dual", action="store_true", help="Use the dual of a map file")
    peel_parser.add_argument("--kappa", type=rational, required=True)
    peel_parser.add_argument("--eps", type=rational, default=DEFAULT_EPS)
    peel_parser.add_argument("--strategy", choices=strategies, default="exact")
    peel_parser.add_argument("--choice", choices=("best", "random"), default="best", help="Exact strategy tie-break")
    peel_parser.add_argument("--verify", action="store_true", help="Re-check the trace after peeling")
    peel_parser.add_argument("--emit-certificates", metavar="PATH", help="Write every removed set's certificate")

    # Transfer command
    transfer_parser = subparsers.add_parser("transfer", help="Primal expander from a dual vertex set")
    transfer_parser.add_argument("map", help="Map JSON file")
    transfer_parser.add_argument("--trace", help="Peeling trace of the dual; uses its final set and kappa_eps")
    transfer_parser.add_argument("--faces", help="Comma separated dual vertices (faces)")
    transfer_parser.add_argument("--kappa", type=rational, help="Expansion of the induced dual subgraph")
    transfer_parser.add_argument("--samples", type=int, default=0, help="Sets to break down lemma by lemma")

    # Pipeline command
    pipeline_parser = subparsers.add_parser("pipeline", help="Sample, dualize, peel and transfer over many trials")
    add_genus_arguments(pipeline_parser)
    pipeline_parser.add_argument("--kappa", type=rational, help="A single kappa_0 instead of the default grid")
    pipeline_parser.add_argument("--eps", type=rational)
    pipeline_parser.add_argument("--strategy", choices=strategies, default=AUTO_STRATEGY)
    pipeline_parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    pipeline_parser.add_argument("--budget", type=int, help="Candidate cuts for the isolation estimate")
    pipeline_parser.add_argument("--workers", type=int, default=DEFAULT_MAX_WORKERS)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point"""
    parser = setup_parser()
    args = parser.parse_args(argv)

    handler = COMMANDS.get(args.command)
    if handler is None:
        parser.print_help()
        return EXIT_CODES["config"]

    terminal = Terminal()
    try:
        handler(args, terminal)
    except (ArgumentError, MapValidationError) as e:
        terminal.show_error(str(e))
        return EXIT_CODES["config"]
    except CapacityError as e:
        terminal.show_error(str(e))
        terminal.show_info("Raise --cap or pick a heuristic strategy")
        return EXIT_CODES["capacity"]
    except SamplingError as e:
        terminal.show_error(str(e))
        if e.histogram:
            terminal.display_histogram(e.histogram, title="Genera seen before giving up")
        return EXIT_CODES["sampling"]
    except (ExpanderError, OSError) as e:
        terminal.show_error(str(e))
        return EXIT_CODES["error"]
    return EXIT_CODES["ok"]


if __name__ == "__main__":
    sys.exit(main())
