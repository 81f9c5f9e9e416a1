from fractions import Fraction
from typing import Dict, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from models import CutReport, MapSummary, PeelingTrace, VertexSet
from .colors import (
    COUNT_COLOR,
    HEADER_COLOR,
    RATIONAL_COLOR,
    STRATEGY_COLOR,
    VERTEX_COLOR,
    style,
)


def pretty_rational(value: Optional[Fraction]) -> str:
    if value is None:
        return ""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_flag(value: Optional[bool]) -> str:
    if value is None:
        return style("n/a", "dim")
    return style("yes", "success") if value else style("no", "error")


def format_vertices(vertex_set: VertexSet, limit: int = 24) -> str:
    members = vertex_set.sorted()
    shown = ", ".join(str(v) for v in members[:limit])
    if len(members) > limit:
        shown += f", ... ({len(members)} vertices)"
    return "{" + shown + "}"


class Terminal:
    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    def display_cut_report(self, vertex_set: VertexSet, report: CutReport, title: str = "Cut"):
        """One set with its boundary, volumes and exact ratio"""
        table = Table(title=title, show_header=True, header_style=f"bold {HEADER_COLOR}")
        table.add_column("Set", style=VERTEX_COLOR)
        table.add_column("Boundary", style=COUNT_COLOR, justify="right")
        table.add_column("Volume", style=COUNT_COLOR, justify="right")
        table.add_column("Total", style=COUNT_COLOR, justify="right")
        table.add_column("Ratio", style=RATIONAL_COLOR, justify="right")
        table.add_row(
            format_vertices(vertex_set),
            str(report.boundary),
            str(report.volume_in),
            str(report.volume_total),
            pretty_rational(report.ratio),
        )
        self.console.print(table)

    def display_vertex_set(self, title: str, vertex_set: VertexSet, volume: int, total: int):
        self.console.print(
            f"{style(title, 'title', bold=True)}: {format_vertices(vertex_set)} "
            f"{style(f'volume {volume} of {total}', 'dim')}"
        )

    def display_map_summary(self, summary: MapSummary, title: str = "Map"):
        table = Table(title=title, show_header=True, header_style=f"bold {HEADER_COLOR}")
        for column in ("Vertices", "Edges", "Faces", "Genus", "Face degrees"):
            table.add_column(column, style=COUNT_COLOR, justify="right")
        degrees: Dict[int, int] = {}
        for degree in summary.face_degrees:
            degrees[degree] = degrees.get(degree, 0) + 1
        table.add_row(
            str(summary.vertices),
            str(summary.edges),
            str(summary.faces),
            str(summary.genus),
            ", ".join(f"{d}x{c}" for d, c in sorted(degrees.items())),
        )
        self.console.print(table)

    def display_trace(self, trace: PeelingTrace, edges_before: int):
        """Every removed set, then the outcome"""
        table = Table(
            title=f"Peeling at kappa_eps = {pretty_rational(trace.kappa_eps)}",
            show_header=True,
            header_style=f"bold {HEADER_COLOR}",
        )
        table.add_column("Step", justify="right", width=6)
        table.add_column("Removed set", style=VERTEX_COLOR)
        table.add_column("Ratio", style=RATIONAL_COLOR, justify="right")
        table.add_column("Edges left", style=COUNT_COLOR, justify="right")
        for index, step in enumerate(trace.steps, start=1):
            table.add_row(
                str(index),
                format_vertices(step.set),
                pretty_rational(step.certificate.ratio),
                str(step.edges_remaining),
            )
        self.console.print(table)

        strategy = style(trace.strategy, "strategy")
        if trace.exhausted:
            self.show_warning(
                f"{strategy} peeling consumed every edge of {edges_before} "
                f"({len(trace.stranded)} stranded vertices)"
            )
        else:
            self.show_success(
                f"{strategy} peeling kept {len(trace.final_set)} vertices after {trace.tau} steps"
            )

    def display_histogram(self, histogram: Dict[int, int], title: str = "Genus histogram"):
        total = sum(histogram.values())
        table = Table(title=title, show_header=True, header_style=f"bold {HEADER_COLOR}")
        table.add_column("Genus", justify="right")
        table.add_column("Count", style=COUNT_COLOR, justify="right")
        table.add_column("Fraction", style=RATIONAL_COLOR, justify="right")
        for genus, count in sorted(histogram.items()):
            table.add_row(str(genus), str(count), f"{count / total:.4f}" if total else "")
        table.add_section()
        table.add_row(style("Total", "bold"), style(str(total), "bold"), "")
        self.console.print(table)

    def display_transfer(self, result):
        table = Table(title="Dual transfer", show_header=True, header_style=f"bold {HEADER_COLOR}")
        table.add_column("Primal edges", style=COUNT_COLOR, justify="right")
        table.add_column("Induced", justify="center")
        table.add_column("D", justify="right")
        table.add_column("Claimed", style=RATIONAL_COLOR, justify="right")
        table.add_column("h(G)", style=RATIONAL_COLOR, justify="right")
        table.add_column("Dual checked", justify="center")
        table.add_column("Verified", justify="center")
        table.add_row(
            str(result.primal.graph.edge_count),
            format_flag(result.primal.is_induced),
            str(result.face_degree_bound),
            pretty_rational(result.claimed_kappa),
            pretty_rational(result.cheeger),
            format_flag(result.dual_verified),
            format_flag(result.verified),
        )
        self.console.print(table)
        failing = [b for b in result.breakdowns if not b.holds]
        if result.breakdowns:
            passing = len(result.breakdowns) - len(failing)
            self.show_info(f"{passing} of {len(result.breakdowns)} sampled sets pass the case split")

    def display_pipeline_report(self, report):
        """Per-trial rows, then retention quantiles per kappa_0"""
        table = Table(title="Pipeline", show_header=True, header_style=f"bold {HEADER_COLOR}")
        table.add_column("Trial", justify="right")
        table.add_column("Genus", justify="right")
        table.add_column("kappa_0", style=RATIONAL_COLOR, justify="right")
        table.add_column("Isol+ vol", style=COUNT_COLOR, justify="right")
        table.add_column("Dual kept", style=COUNT_COLOR, justify="right")
        table.add_column("Primal kept", style=COUNT_COLOR, justify="right")
        table.add_column("Retention", style=RATIONAL_COLOR, justify="right")
        table.add_column("Certified", style=RATIONAL_COLOR, justify="right")
        table.add_column("Mode", style=STRATEGY_COLOR)
        for record in report.records:
            if record.error:
                table.add_row(str(record.trial), "", pretty_rational(record.kappa0), style(record.error, "error"))
                continue
            mode = style("exact", "exact") if record.peel_exact else style("heuristic", "heuristic")
            table.add_row(
                str(record.trial),
                str(record.genus),
                pretty_rational(record.kappa0),
                str(record.strong_isolated_volume),
                str(record.dual_edges_retained),
                str(record.primal_edges_retained),
                f"{float(record.retention):.3f}" if record.retention is not None else "",
                pretty_rational(record.certified_kappa),
                mode,
            )
        self.console.print(table)

        for kappa0, levels in report.quantiles().items():
            shown = " • ".join(f"q{pretty_rational(q)}={float(v):.3f}" for q, v in levels.items())
            self.console.print(style(f"kappa_0 = {pretty_rational(kappa0)}: {shown}", "dim"))

    def show_success(self, message: str):
        """Show success message"""
        self.console.print(f"{style('✓', 'success')} {message}")

    def show_error(self, message: str):
        """Show error message"""
        self.console.print(f"{style('✗', 'error')} {message}")

    def show_warning(self, message: str):
        self.console.print(f"{style('!', 'warning')} {message}")

    def show_info(self, message: str):
        """Show info message"""
        self.console.print(f"{style('ℹ', 'info')} {message}")

    def show_header(self, title: str):
        """Show application header"""
        header = Panel(
            Text(title, style=f"bold {RATIONAL_COLOR}", justify="center"),
            style=HEADER_COLOR,
            padding=(1, 2),
        )
        self.console.print(header)
