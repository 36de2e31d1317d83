from __future__ import annotations

import math
from typing import TYPE_CHECKING

from kglr.experiments.models import DriftSummary
from kglr.spectral.norms import hs_norm

if TYPE_CHECKING:
    from collections.abc import Sequence

    from kglr.experiments.models import EnergySample, RunRecord
    from kglr.problem.models import SpectralState
    from kglr.spectral.models import Grid


def relative_err(num: SpectralState, ref: SpectralState, grid: Grid) -> float:
    """|q - q_ref|_H1 / |q_ref|_H1 + |p - p_ref|_L2 / |p_ref|_L2."""
    q_ref = hs_norm(ref.q, 1.0, grid)
    p_ref = hs_norm(ref.p, 0.0, grid)
    if q_ref == 0.0 or p_ref == 0.0:
        msg = "reference state has a zero H1 or L2 norm"
        raise ValueError(msg)
    return (
        hs_norm(num.q - ref.q, 1.0, grid) / q_ref
        + hs_norm(num.p - ref.p, 0.0, grid) / p_ref
    )


def state_defect(num: SpectralState, ref: SpectralState, grid: Grid) -> float:
    """Like ``relative_err``, falling back to the absolute norm for zero components."""
    total = 0.0
    for diff, scale, s in (
        (num.q - ref.q, hs_norm(ref.q, 1.0, grid), 1.0),
        (num.p - ref.p, hs_norm(ref.p, 0.0, grid), 0.0),
    ):
        norm = hs_norm(diff, s, grid)
        total += norm / scale if scale > 0.0 else norm
    return total


def estimate_order(errs: Sequence[tuple[float, float]]) -> list[float]:
    """Pairwise slopes log(e_i / e_{i+1}) / log(h_i / h_{i+1})."""
    for h, err in errs:
        if not err > 0.0:
            msg = f"error at h={h!r} must be positive, got {err!r}"
            raise ValueError(msg)
    for (h0, _), (h1, _) in zip(errs, errs[1:], strict=False):
        if not h1 < h0:
            msg = f"step sizes must be strictly decreasing, got {h0!r} then {h1!r}"
            raise ValueError(msg)
    return [
        math.log(e0 / e1) / math.log(h0 / h1)
        for (h0, e0), (h1, e1) in zip(errs, errs[1:], strict=False)
    ]


def attach_orders(records: list[RunRecord]) -> None:
    """Fill ``estimated_order`` per method, from the next coarser finite run.

    The coarsest run of each method keeps ``None``; aborted runs and runs
    with a zero error are skipped.
    """
    by_method: dict[str, list[RunRecord]] = {}
    for record in records:
        if record.finite and record.err > 0.0:
            by_method.setdefault(record.method, []).append(record)
    for runs in by_method.values():
        runs.sort(key=lambda r: r.h, reverse=True)
        unique = [r for i, r in enumerate(runs) if i == 0 or r.h < runs[i - 1].h]
        slopes = estimate_order([(r.h, r.err) for r in unique])
        for record, slope in zip(unique[1:], slopes, strict=True):
            record.estimated_order = slope


def summarize_drift(
    record: RunRecord,
    T_final: float,
    ratio_max: float,
) -> DriftSummary:
    """Compare the largest relative drift of each half of the time window."""
    series: Sequence[EnergySample] = record.energy_series or []
    half = 0.5 * T_final
    first = max((s.rel_drift for s in series if s.t <= half), default=0.0)
    second = max((s.rel_drift for s in series if s.t > half), default=0.0)
    if first > 0.0:
        ratio = second / first
    else:
        ratio = math.inf if second > 0.0 else 1.0
    return DriftSummary(
        method=record.method,
        h=record.h,
        max_first_half=first,
        max_second_half=second,
        trend_ratio=ratio,
        bounded=second <= ratio_max * first,
    )
