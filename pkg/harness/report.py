"""
Pipeline report model and its JSON/CSV emitters.

Rationals are written as "p/q" strings and read back exactly; both formats
carry the same columns in the same order.
"""

import csv
import json
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from math import ceil
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from models.errors import ArgumentError

REPORT_FORMATS = ("json", "csv")

QUANTILE_LEVELS = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)


def format_rational(value: Optional[Fraction]) -> Optional[str]:
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Optional[str]) -> Optional[Fraction]:
    if text is None or text == "":
        return None
    return Fraction(text)


@dataclass(frozen=True)
class TrialRecord:
    """One (trial, kappa_0) row"""

    trial: int
    seed: int
    n: int
    # "gluing" or "flips", see sampler.gluing
    sampler: Optional[str] = None
    genus: Optional[int] = None
    kappa0: Optional[Fraction] = None
    kappa: Optional[Fraction] = None
    kappa_eps: Optional[Fraction] = None
    total_volume: Optional[int] = None
    strong_isolated_volume: Optional[int] = None
    isolation_exact: Optional[bool] = None
    # None when a heuristic lower bound cannot settle it
    isolation_hypothesis: Optional[bool] = None
    # Isol_kappa inside Isol+_kappa_0; None above the enumeration cap
    lemma_inclusion: Optional[bool] = None
    tau: Optional[int] = None
    dual_edges_retained: Optional[int] = None
    primal_edges_retained: Optional[int] = None
    retention: Optional[Fraction] = None
    certified_kappa: Optional[Fraction] = None
    peel_exact: Optional[bool] = None
    transfer_verified: Optional[bool] = None
    primal_induced: Optional[bool] = None
    error: Optional[str] = None


RATIONAL_COLUMNS = ("kappa0", "kappa", "kappa_eps", "retention", "certified_kappa")
INT_COLUMNS = (
    "trial",
    "seed",
    "n",
    "genus",
    "total_volume",
    "strong_isolated_volume",
    "tau",
    "dual_edges_retained",
    "primal_edges_retained",
)
BOOL_COLUMNS = (
    "isolation_exact",
    "isolation_hypothesis",
    "lemma_inclusion",
    "peel_exact",
    "transfer_verified",
    "primal_induced",
)

# Documented header, in emission order
REPORT_COLUMNS: List[str] = [f.name for f in fields(TrialRecord)]


def record_to_row(record: TrialRecord) -> Dict[str, object]:
    row = asdict(record)
    for column in RATIONAL_COLUMNS:
        row[column] = format_rational(row[column])
    return {column: row[column] for column in REPORT_COLUMNS}


def row_to_record(row: Dict[str, object]) -> TrialRecord:
    values = {}
    for column in REPORT_COLUMNS:
        value = row.get(column)
        if value == "":
            value = None
        if value is not None:
            if column in RATIONAL_COLUMNS:
                value = parse_rational(value)
            elif column in INT_COLUMNS:
                value = int(value)
            elif column in BOOL_COLUMNS and isinstance(value, str):
                value = value == "true"
        values[column] = value
    return TrialRecord(**values)


def retention_quantiles(
    values: Sequence[Fraction], levels: Sequence[Fraction] = QUANTILE_LEVELS
) -> Dict[Fraction, Fraction]:
    """Nearest-rank quantiles: the value of rank max(1, ceil(q N)) in sorted order"""
    ordered = sorted(values)
    if not ordered:
        return {}
    result = {}
    for level in levels:
        rank = max(1, ceil(level * len(ordered)))
        result[level] = ordered[rank - 1]
    return result


@dataclass
class PipelineReport:
    config: Dict[str, object] = field(default_factory=dict)
    records: List[TrialRecord] = field(default_factory=list)

    def kappa0_values(self) -> List[Fraction]:
        return sorted({r.kappa0 for r in self.records if r.kappa0 is not None}, reverse=True)

    def quantiles(self) -> Dict[Fraction, Dict[Fraction, Fraction]]:
        """Retention quantiles per kappa_0 over the rows without errors"""
        return {
            kappa0: retention_quantiles(
                [r.retention for r in self.records if r.kappa0 == kappa0 and r.retention is not None]
            )
            for kappa0 in self.kappa0_values()
        }

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "columns": REPORT_COLUMNS,
            "rows": [record_to_row(r) for r in self.records],
            "quantiles": {
                format_rational(kappa0): {
                    format_rational(level): format_rational(value) for level, value in levels.items()
                }
                for kappa0, levels in self.quantiles().items()
            },
        }


def emit_report(report: PipelineReport, path, format: str = "json") -> Path:
    """Write the report; CSV carries the rows only (a header-only file when empty)"""
    if format not in REPORT_FORMATS:
        raise ArgumentError(f"format must be one of {REPORT_FORMATS}, got '{format}'")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if format == "json":
        with open(path, "w") as f:
            json.dump(report.to_dict(), f, indent=2)
            f.write("\n")
        return path

    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=REPORT_COLUMNS)
        writer.writeheader()
        for record in report.records:
            row = record_to_row(record)
            writer.writerow(
                {
                    column: "" if value is None else ("true" if value is True else "false" if value is False else value)
                    for column, value in row.items()
                }
            )
    return path


def load_report(path) -> PipelineReport:
    """Read a report written by emit_report, in either format"""
    path = Path(path)
    if path.suffix == ".csv":
        with open(path, newline="") as f:
            return PipelineReport(records=[row_to_record(row) for row in csv.DictReader(f)])
    with open(path) as f:
        data = json.load(f)
    return PipelineReport(
        config=data.get("config", {}),
        records=[row_to_record(row) for row in data.get("rows", [])],
    )
