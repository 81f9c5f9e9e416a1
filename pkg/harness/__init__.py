from .isolation import IsolationEstimate, estimate_isolated_volume
from .pipeline import PipelineConfig, run_pipeline, run_trial
from .report import (
    REPORT_COLUMNS,
    PipelineReport,
    TrialRecord,
    emit_report,
    load_report,
    retention_quantiles,
)

__all__ = [
    "IsolationEstimate",
    "PipelineConfig",
    "PipelineReport",
    "REPORT_COLUMNS",
    "TrialRecord",
    "emit_report",
    "estimate_isolated_volume",
    "load_report",
    "retention_quantiles",
    "run_pipeline",
    "run_trial",
]
