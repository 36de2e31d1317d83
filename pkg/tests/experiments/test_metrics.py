from __future__ import annotations

import math

import numpy as np
import pytest

from kglr.experiments.metrics import (
    attach_orders,
    estimate_order,
    relative_err,
    state_defect,
    summarize_drift,
)
from kglr.experiments.models import EnergySample, RunRecord
from kglr.integrators.models import MethodTag
from kglr.problem.models import SpectralState
from kglr.spectral.models import make_grid

pytestmark = pytest.mark.unit

GRID = make_grid(4, 0.0)


def _state(q1: complex, p0: complex) -> SpectralState:
    q = GRID.delta(1, q1) + GRID.delta(-1, np.conj(q1))
    return SpectralState(q=q, p=GRID.delta(0, p0))


def _series(drifts: list[float], T: float) -> list[EnergySample]:
    times = np.linspace(0.0, T, len(drifts))
    return [EnergySample(float(t), d, d) for t, d in zip(times, drifts, strict=True)]


class TestErrors:
    """Tests for the H1 x L2 error measures."""

    def test_relative_err_of_equal_states(self) -> None:
        """Test zero error against itself."""

        state = _state(1.0, 2.0)

        assert relative_err(state, state, GRID) == 0.0

    def test_relative_err_adds_components(self) -> None:
        """Test a 10% change of q plus a 10% change of p."""

        ref = _state(1.0, 2.0)

        assert relative_err(ref.scaled(1.1), ref, GRID) == pytest.approx(0.2)

    def test_relative_err_zero_reference(self) -> None:
        """Test that a zero reference component is rejected."""

        with pytest.raises(ValueError, match="zero H1 or L2 norm"):
            relative_err(_state(1.0, 2.0), _state(1.0, 0.0), GRID)

    def test_state_defect_falls_back_to_absolute(self) -> None:
        """Test the absolute norm where the reference component vanishes."""

        ref = _state(1.0, 0.0)
        num = SpectralState(q=ref.q, p=GRID.delta(0, 1e-9))

        assert state_defect(num, ref, GRID) == pytest.approx(1e-9)


class TestEstimateOrder:
    """Tests for pairwise order estimation."""

    def test_second_order(self) -> None:
        """Test errors 1e-2 and 2.5e-3 at h = 0.1 and 0.05."""

        assert estimate_order([(0.1, 1e-2), (0.05, 2.5e-3)]) == pytest.approx([2.0])

    def test_single_point(self) -> None:
        """Test that one point gives no slope."""

        assert estimate_order([(0.1, 1e-2)]) == []

    def test_nonpositive_error(self) -> None:
        """Test that errors must be positive."""

        with pytest.raises(ValueError, match="must be positive"):
            estimate_order([(0.1, 1e-2), (0.05, 0.0)])

    def test_increasing_step(self) -> None:
        """Test that step sizes must decrease."""

        with pytest.raises(ValueError, match="strictly decreasing"):
            estimate_order([(0.05, 1e-2), (0.1, 2.5e-3)])


class TestAttachOrders:
    """Tests for filling the order column."""

    def test_orders_per_method(self) -> None:
        """Test slopes attached to the finer run of each pair."""

        records = [
            RunRecord(MethodTag.SLR, 0.1, 4e-2),
            RunRecord(MethodTag.SLR, 0.05, 1e-2),
            RunRecord(MethodTag.SLR, 0.025, 2.5e-3),
            RunRecord(MethodTag.TI, 0.1, 1e-2),
            RunRecord(MethodTag.TI, 0.05, 5e-3),
        ]

        attach_orders(records)

        orders = [r.estimated_order for r in records]
        assert orders[0] is None
        assert orders[1:3] == pytest.approx([2.0, 2.0])
        assert orders[3] is None
        assert orders[4] == pytest.approx(1.0)

    def test_skips_aborted_runs(self) -> None:
        """Test that aborted runs get no order and are left out of slopes."""

        records = [
            RunRecord(MethodTag.LR23, 0.1, 4e-2),
            RunRecord(MethodTag.LR23, 0.05, math.nan, aborted=True),
            RunRecord(MethodTag.LR23, 0.025, 2.5e-3),
        ]

        attach_orders(records)

        assert records[1].estimated_order is None
        assert records[2].estimated_order == pytest.approx(2.0)


class TestSummarizeDrift:
    """Tests for the half-window drift verdict."""

    def test_bounded_oscillation(self) -> None:
        """Test a drift that does not grow."""

        record = RunRecord(
            MethodTag.SLR,
            0.1,
            3e-4,
            energy_series=_series([0.0, 3e-4, 1e-4, 2e-4, 3e-4], 4.0),
        )

        summary = summarize_drift(record, 4.0, 2.0)

        assert summary.max_first_half == 3e-4
        assert summary.max_second_half == 3e-4
        assert summary.trend_ratio == pytest.approx(1.0)
        assert summary.bounded

    def test_growing_drift(self) -> None:
        """Test a linear trend."""

        record = RunRecord(
            MethodTag.LR23,
            0.1,
            4e-3,
            energy_series=_series([0.0, 1e-3, 2e-3, 3e-3, 4e-3], 4.0),
        )

        summary = summarize_drift(record, 4.0, 2.0)

        assert summary.trend_ratio == pytest.approx(2.0)
        assert summary.max_second_half > summary.max_first_half
        assert summary.bounded

        assert not summarize_drift(record, 4.0, 1.5).bounded

    @pytest.mark.parametrize(
        ("drifts", "ratio", "bounded"),
        [([0.0, 0.0, 0.0], 1.0, True), ([0.0, 0.0, 1e-9], math.inf, False)],
    )
    def test_zero_first_half(
        self, drifts: list[float], ratio: float, bounded: bool
    ) -> None:
        """Test the ratio when the first half shows no drift."""

        record = RunRecord(MethodTag.SLR, 0.1, 0.0, energy_series=_series(drifts, 2.0))

        summary = summarize_drift(record, 2.0, 2.0)

        assert summary.trend_ratio == ratio
        assert summary.bounded is bounded
