"""
Experiment sweeps: convergence order, efficiency, long-time energy drift
and time reversibility.

Every sweep is a deterministic function of its ExperimentConfig (wall
times excepted). Sweep points run through ``run_jobs`` and come back in
config order: methods outer, step sizes inner.
"""

from __future__ import annotations

import logging
import math
import statistics
import time
from functools import partial
from typing import TYPE_CHECKING

from kglr.exceptions import IntegrationAbortedError
from kglr.experiments.jobs import run_jobs
from kglr.experiments.metrics import (
    attach_orders,
    relative_err,
    state_defect,
    summarize_drift,
)
from kglr.experiments.models import EnergySample, ExperimentKind, RunRecord
from kglr.experiments.reference import check_reference_refinement, reference_solution
from kglr.integrators.driver import advance, integrate, step_count
from kglr.integrators.models import MethodTag
from kglr.integrators.slr import slr_start, slr_step, slr_step_back
from kglr.problem.energy import data_size
from kglr.problem.initial_data import rough_initial_data

if TYPE_CHECKING:
    from kglr.experiments.models import DriftSummary, ExperimentConfig
    from kglr.experiments.reference import ReferenceCache
    from kglr.problem.models import ProblemSpec, SpectralState
    from kglr.spectral.models import Grid

    type SweepPoint = tuple[MethodTag, float]

logger = logging.getLogger(__name__)


def _require_kind(cfg: ExperimentConfig, kind: ExperimentKind) -> None:
    if cfg.kind is not kind:
        msg = f"expected a {kind} config, got {cfg.kind}"
        raise ValueError(msg)


def _setup(cfg: ExperimentConfig) -> tuple[ProblemSpec, Grid, SpectralState]:
    spec, grid = cfg.problem(), cfg.grid()
    logger.debug(
        f"{cfg.kind}: M={grid.M} rho={grid.rho} theta={spec.theta} "
        f"nonlinearity={spec.nonlinearity} seed={spec.seed}",
    )
    return spec, grid, rough_initial_data(spec, grid)


def _points(cfg: ExperimentConfig) -> list[SweepPoint]:
    return [(method, h) for method in cfg.methods for h in cfg.step_sizes]


def _aborted(method: MethodTag, h: float, T: float) -> RunRecord:
    return RunRecord(
        method=method,
        h=h,
        err=math.nan,
        steps=step_count(h, T),
        aborted=True,
    )


def _error_point(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    ref: SpectralState,
    T: float,
    point: SweepPoint,
) -> RunRecord:
    method, h = point
    logger.info(f"{method} h={h:g}: start")
    try:
        n = step_count(h, T)
        result = integrate(method, spec, grid, init, h, T, observe_every=n)
    except IntegrationAbortedError:
        logger.exception(f"{method} h={h:g}: aborted")
        return _aborted(method, h, T)

    err = relative_err(result.final, ref, grid)
    logger.info(f"{method} h={h:g}: err={err:.3e}")
    return RunRecord(
        method=method,
        h=h,
        err=err,
        steps=result.steps,
        f_evals=result.f_evals,
    )


def _reference_gate(
    cfg: ExperimentConfig,
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    records: list[RunRecord],
    cache: ReferenceCache | None,
) -> None:
    errors = [r.err for r in records if r.finite and r.err > 0.0]
    if not errors:
        logger.warning("reference gate skipped: no finite nonzero sweep error")
        return
    check_reference_refinement(
        spec, grid, init, cfg.T_final, cfg.reference_step, min(errors), cache
    )


def run_convergence(
    cfg: ExperimentConfig,
    jobs: int = 1,
    cache: ReferenceCache | None = None,
) -> list[RunRecord]:
    """Global H1 x L2 error at T_final of every (method, h) against the reference."""
    _require_kind(cfg, ExperimentKind.CONVERGENCE)
    spec, grid, init = _setup(cfg)
    ref = reference_solution(spec, grid, init, cfg.T_final, cfg.reference_step, cache)

    worker = partial(_error_point, spec, grid, init, ref, cfg.T_final)
    records = run_jobs(worker, _points(cfg), jobs)
    attach_orders(records)
    if cfg.reference_gate:
        _reference_gate(cfg, spec, grid, init, records, cache)
    return records


def run_efficiency(
    cfg: ExperimentConfig,
    cache: ReferenceCache | None = None,
) -> list[RunRecord]:
    """Convergence sweep plus the median wall time of the stepping loop.

    Points always run sequentially. Each one is integrated once untimed
    (warm-up, also giving the error), then ``cfg.repetitions`` timed times.
    """
    _require_kind(cfg, ExperimentKind.EFFICIENCY)
    spec, grid, init = _setup(cfg)
    ref = reference_solution(spec, grid, init, cfg.T_final, cfg.reference_step, cache)

    records = []
    for method, h in _points(cfg):
        record = _error_point(spec, grid, init, ref, cfg.T_final, (method, h))
        if record.aborted:
            records.append(record)
            continue

        n = record.steps
        timings = []
        for _ in range(cfg.repetitions):
            start = time.perf_counter()
            advance(method, spec, grid, init, h, n)
            timings.append(time.perf_counter() - start)
        record.wall_seconds = statistics.median(timings)
        logger.info(f"{method} h={h:g}: {record.wall_seconds:.4f}s over {n} steps")
        records.append(record)

    attach_orders(records)
    if cfg.reference_gate:
        _reference_gate(cfg, spec, grid, init, records, cache)
    return records


def _drift_point(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    T: float,
    observe_every: int,
    point: SweepPoint,
) -> RunRecord:
    method, h = point
    logger.info(f"{method} h={h:g}: energy run to T={T:g}")
    try:
        result = integrate(method, spec, grid, init, h, T, observe_every=observe_every)
    except IntegrationAbortedError:
        logger.exception(f"{method} h={h:g}: aborted")
        return _aborted(method, h, T)

    H0 = result.observations[0].energy
    scale = abs(H0) if H0 != 0.0 else 1.0
    eps_sq = data_size(grid, init) ** 2 or 1.0
    series = [
        EnergySample(
            t=obs.t,
            rel_drift=abs(obs.energy - H0) / scale,
            scaled_drift=abs(obs.energy - H0) / eps_sq,
        )
        for obs in result.observations
    ]
    return RunRecord(
        method=method,
        h=h,
        err=max(sample.rel_drift for sample in series),
        energy_series=series,
        steps=result.steps,
        f_evals=result.f_evals,
    )


def run_energy_drift(cfg: ExperimentConfig, jobs: int = 1) -> list[RunRecord]:
    """Relative energy drift |H(t_n) - H(0)| / |H(0)| every observe_every steps.

    ``err`` of each record is the largest relative drift over the window.
    """
    _require_kind(cfg, ExperimentKind.ENERGY_DRIFT)
    spec, grid, init = _setup(cfg)
    worker = partial(_drift_point, spec, grid, init, cfg.T_final, cfg.observe_every)
    return run_jobs(worker, _points(cfg), jobs)


def drift_summaries(
    cfg: ExperimentConfig,
    records: list[RunRecord],
) -> list[DriftSummary]:
    """Half-window trend verdict for every finished energy run."""
    summaries = []
    for record in records:
        if record.aborted:
            continue
        summary = summarize_drift(record, cfg.T_final, cfg.drift_ratio_max)
        if summary.bounded:
            logger.info(
                f"{record.method}: energy drift bounded "
                f"(second/first half = {summary.trend_ratio:.3g})",
            )
        else:
            logger.warning(
                f"{record.method}: energy drift grows "
                f"(second/first half = {summary.trend_ratio:.3g} "
                f"> {cfg.drift_ratio_max:g})",
            )
        summaries.append(summary)
    return summaries


def reversibility_check(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    h: float,
    n_steps: int,
) -> float:
    """Run ``n_steps`` SLR recursions forward, undo them, compare with ``init``.

    The forward pass is the start step followed by ``n_steps`` two-step
    recursions; the backward pass applies the reversed recursion as often,
    which returns the window to (u_0, u_1). The result is the H1 x L2
    defect of the recovered u_0, relative where ``init`` is nonzero.
    """
    if n_steps < 1:
        msg = f"n_steps must be at least 1, got {n_steps}"
        raise ValueError(msg)

    ts = slr_start(spec, grid, init, h)
    for _ in range(n_steps):
        ts = slr_step(spec, grid, ts)
    for _ in range(n_steps):
        ts = slr_step_back(spec, grid, ts)
    return state_defect(ts.prev, init, grid)


def _reversibility_point(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    T: float,
    h: float,
) -> RunRecord:
    n = step_count(h, T)
    defect = reversibility_check(spec, grid, init, h, n)
    logger.info(f"SLR h={h:g}: reversibility defect {defect:.3e} after {n} steps")
    return RunRecord(method=MethodTag.SLR, h=h, err=defect, steps=n)


def run_reversibility(cfg: ExperimentConfig, jobs: int = 1) -> list[RunRecord]:
    """``reversibility_check`` over T_final / h steps for every step size."""
    _require_kind(cfg, ExperimentKind.REVERSIBILITY)
    spec, grid, init = _setup(cfg)
    worker = partial(_reversibility_point, spec, grid, init, cfg.T_final)
    return run_jobs(worker, list(cfg.step_sizes), jobs)
