"""
The experiment pipeline: sample a triangulation, dualize, measure strong
isolation, peel the dual, transfer the expander back to the primal map.

For each kappa_0 of the grid the dual graph is peeled with kappa = kappa_0^2,
which leaves a (1 - eps) kappa_0^2 expander, and the transfer with D = 3
certifies (1 - eps) kappa_0^2 / 24 on the primal side.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from cheeger import isolated_vertices_exact, within_cap
from duality import DualTransferInstance, transfer_expander
from models import as_rational
from models.errors import ConfigError, ExpanderError, MapValidationError
from peeling import peel
from peeling.process import EXACT_VERDICT_STRATEGIES
from sampler import GluingConfig, genus_of_triangulation, sample_triangulation

from .isolation import estimate_isolated_volume
from .report import REPORT_FORMATS, PipelineReport, TrialRecord, format_rational


@dataclass(frozen=True)
class PipelineConfig:
    n: int
    theta: Optional[Fraction] = None
    genus: Optional[int] = None
    # a single kappa_0; the grid is used when unset
    kappa: Optional[Fraction] = None
    kappa_grid: Optional[Tuple[Fraction, ...]] = None
    eps: Optional[Fraction] = None
    seed: int = 0
    strategy: str = "auto"
    trials: int = 1
    budget: Optional[int] = None
    output: Optional[str] = None
    format: str = "json"
    max_workers: int = 1
    cap: Optional[int] = None
    max_attempts: Optional[int] = None
    model: str = "gluing"

    def __post_init__(self):
        from expander_config import (
            AUTO_STRATEGY,
            DEFAULT_EPS,
            get_strategy_names,
            kappa_cap,
        )

        if self.n < 1:
            raise ConfigError(f"n must be at least 1, got {self.n}")
        if self.theta is not None and self.genus is not None:
            raise ConfigError("give theta or genus, not both")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.format not in REPORT_FORMATS:
            raise ConfigError(f"format must be one of {REPORT_FORMATS}")
        if self.strategy not in get_strategy_names() + [AUTO_STRATEGY]:
            raise ConfigError(f"unknown strategy '{self.strategy}'")
        if self.budget is not None and self.budget < 0:
            raise ConfigError("budget must be non-negative")

        eps = DEFAULT_EPS if self.eps is None else self._rational(self.eps, "eps")
        if not 0 < eps < Fraction(1, 2):
            raise ConfigError(f"eps must lie strictly between 0 and 1/2, got {eps}")
        object.__setattr__(self, "eps", eps)
        if self.theta is not None:
            object.__setattr__(self, "theta", self._rational(self.theta, "theta"))

        cap = kappa_cap(eps)
        if self.kappa is not None:
            kappa = self._rational(self.kappa, "kappa")
            if not 0 < kappa <= cap:
                raise ConfigError(f"kappa_0 must lie in (0, {cap}] for eps {eps}, got {kappa}")
            object.__setattr__(self, "kappa", kappa)
        # surfaces an infeasible genus before any trial runs
        self.gluing_config(self.seed)
        if not self.grid():
            raise ConfigError(f"no kappa_0 of the grid lies in (0, {cap}] for eps {eps}")

    @staticmethod
    def _rational(value, name: str) -> Fraction:
        try:
            return as_rational(value, name)
        except ExpanderError as e:
            raise ConfigError(str(e)) from e

    def grid(self) -> List[Fraction]:
        from expander_config import DEFAULT_KAPPA_GRID, admissible_kappa_grid

        if self.kappa is not None:
            return [self.kappa]
        grid = self.kappa_grid if self.kappa_grid is not None else DEFAULT_KAPPA_GRID
        return admissible_kappa_grid(self.eps, [as_rational(k) for k in grid])

    def gluing_config(self, seed: int) -> GluingConfig:
        if self.theta is not None:
            return GluingConfig.from_theta(
                self.n, self.theta, seed=seed, max_attempts=self.max_attempts, model=self.model
            )
        return GluingConfig(
            self.n, target_genus=self.genus, seed=seed, max_attempts=self.max_attempts, model=self.model
        )

    def trial_seeds(self) -> List[int]:
        """One 63-bit seed per trial, spawned from the pipeline seed"""
        streams = np.random.SeedSequence(self.seed).spawn(self.trials)
        return [int(s.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1)) for s in streams]

    def to_dict(self) -> dict:
        data = asdict(self)
        for key in ("theta", "kappa", "eps"):
            if data[key] is not None:
                data[key] = format_rational(data[key])
        data["kappa_grid"] = [format_rational(k) for k in self.grid()]
        return data


def run_trial(task: Tuple[PipelineConfig, int, int]) -> List[TrialRecord]:
    """Every kappa_0 row of one trial; library errors end up in the rows"""
    cfg, trial, seed = task
    from expander_config import FACE_DEGREE_TRIANGULATION

    base = dict(trial=trial, seed=seed, n=cfg.n, sampler=cfg.model)
    try:
        triangulation = sample_triangulation(cfg.gluing_config(seed))
        if triangulation.face_degree_bound() != FACE_DEGREE_TRIANGULATION:
            raise MapValidationError("the sampler returned a map with a face that is not a triangle")
    except ExpanderError as e:
        return [TrialRecord(**base, kappa0=k, error=f"{type(e).__name__}: {e}") for k in cfg.grid()]

    genus = genus_of_triangulation(triangulation)
    dual_graph = triangulation.dual().underlying_graph().graph
    records = []
    for kappa0 in cfg.grid():
        row = dict(base, genus=genus, kappa0=kappa0, total_volume=dual_graph.total_volume)
        try:
            records.append(_run_kappa(cfg, triangulation, dual_graph, kappa0, seed, row))
        except ExpanderError as e:
            records.append(TrialRecord(**row, error=f"{type(e).__name__}: {e}"))
    return records


def _run_kappa(cfg: PipelineConfig, triangulation, dual_graph, kappa0: Fraction, seed: int, row: dict) -> TrialRecord:
    kappa = kappa0 * kappa0
    kappa_eps = (1 - cfg.eps) * kappa
    isolation = estimate_isolated_volume(dual_graph, kappa0, cfg.budget, strong=True, cap=cfg.cap, seed=seed)
    within_budget = isolation.volume <= cfg.eps * dual_graph.total_volume
    if isolation.exact:
        hypothesis = within_budget
    else:
        hypothesis = None if within_budget else False

    # Isol_{kappa_0^2} inside Isol+_{kappa_0}, known only when isolation is exact
    lemma_inclusion = None
    if isolation.exact:
        lemma_inclusion = isolated_vertices_exact(dual_graph, kappa, cfg.cap).issubset(isolation.union)

    result, trace = peel(dual_graph, kappa, cfg.eps, strategy=cfg.strategy, seed=seed, cap=cfg.cap)
    row.update(
        kappa=kappa,
        kappa_eps=kappa_eps,
        strong_isolated_volume=isolation.volume,
        isolation_exact=isolation.exact,
        isolation_hypothesis=hypothesis,
        lemma_inclusion=lemma_inclusion,
        tau=trace.tau,
        dual_edges_retained=result.edge_count,
        peel_exact=cfg.strategy in EXACT_VERDICT_STRATEGIES and within_cap(result, cfg.cap),
    )
    if not trace.final_set:
        return TrialRecord(**row, primal_edges_retained=0, retention=Fraction(0))

    instance = DualTransferInstance(triangulation, trace.final_set, kappa_eps)
    transfer = transfer_expander(instance, cap=cfg.cap)
    primal_edges = transfer.primal.graph.edge_count
    return TrialRecord(
        **row,
        primal_edges_retained=primal_edges,
        retention=Fraction(primal_edges, 3 * cfg.n),
        certified_kappa=transfer.claimed_kappa,
        transfer_verified=transfer.verified,
        primal_induced=transfer.primal.is_induced,
    )


def run_pipeline(cfg: PipelineConfig, show_progress: bool = False) -> PipelineReport:
    """Trials run independently (in processes when max_workers > 1) and merge in trial order"""
    from utils.parallel import ParallelRunner

    tasks = [(cfg, trial, seed) for trial, seed in enumerate(cfg.trial_seeds())]
    runner = ParallelRunner(
        max_workers=cfg.max_workers,
        description=f"Pipeline n={cfg.n}",
        show_progress=show_progress,
    )
    records: List[TrialRecord] = []
    for per_trial in runner.map(run_trial, tasks):
        records.extend(per_trial)
    return PipelineReport(config=cfg.to_dict(), records=records)
