from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest

from kglr.exceptions import IntegrationAbortedError
from kglr.integrators.driver import advance, integrate, step_count
from kglr.integrators.models import MethodTag
from kglr.problem.models import SpectralState
from tests.common.parametrizes import ALL_METHODS

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import Grid

pytestmark = pytest.mark.unit


class TestStepCount:
    """Tests for rounding T/h to a step count."""

    @pytest.mark.parametrize(
        ("h", "T", "expected"),
        [(0.25, 1.0, 4), (0.1, 1.0, 10), (2.0**-9, 1.0, 512), (0.1, 1000.0, 10000)],
    )
    def test_dividing_steps(self, h: float, T: float, expected: int) -> None:
        """Test step sizes that divide T."""

        assert step_count(h, T) == expected

    @pytest.mark.parametrize(("h", "T"), [(0.3, 1.0), (0.75, 0.5)])
    def test_non_dividing_step(self, h: float, T: float) -> None:
        """Test that T/h must be a positive integer."""

        with pytest.raises(ValueError, match="does not divide"):
            step_count(h, T)

    def test_nonpositive_time(self) -> None:
        """Test that T must be positive."""

        with pytest.raises(ValueError, match="final time must be positive"):
            step_count(0.1, 0.0)


class TestIntegrate:
    """Tests for the fixed-step driver."""

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_single_step(
        self,
        method: MethodTag,
        sine_spec: ProblemSpec,
        small_grid: Grid,
        small_state: SpectralState,
    ) -> None:
        """Test that T = h takes one step and observes both ends."""

        result = integrate(method, sine_spec, small_grid, small_state, 0.1, 0.1)

        assert result.method is method
        assert result.steps == 1
        assert [o.step for o in result.observations] == [0, 1]
        assert result.final.t == pytest.approx(0.1)

    def test_observation_schedule(
        self, sine_spec: ProblemSpec, small_grid: Grid, small_state: SpectralState
    ) -> None:
        """Test observations every k steps plus the final step."""

        result = integrate(
            MethodTag.SLR, sine_spec, small_grid, small_state, 0.1, 1.0, 3
        )

        assert [o.step for o in result.observations] == [0, 3, 6, 9, 10]
        assert result.observations[0].t == 0.0
        assert result.observations[-1].t == pytest.approx(1.0)

    def test_observer_sees_observed_states(
        self, sine_spec: ProblemSpec, small_grid: Grid, small_state: SpectralState
    ) -> None:
        """Test that the observer callback follows the observation schedule."""

        seen: list[tuple[int, float]] = []

        integrate(
            MethodTag.TI,
            sine_spec,
            small_grid,
            small_state,
            0.25,
            1.0,
            2,
            observer=lambda step, state: seen.append((step, state.t)),
        )

        assert seen == [(0, 0.0), (2, 0.5), (4, 1.0)]

    @pytest.mark.parametrize(
        ("method", "per_step"),
        [(MethodTag.SLR, 1), (MethodTag.LR23, 1), (MethodTag.TI, 2)],
    )
    def test_evaluation_count(
        self,
        method: MethodTag,
        per_step: int,
        sine_spec: ProblemSpec,
        small_grid: Grid,
        small_state: SpectralState,
    ) -> None:
        """Test the number of evaluations of f per step."""

        result = integrate(method, sine_spec, small_grid, small_state, 0.05, 1.0)

        assert result.steps == 20
        assert result.f_evals == per_step * 20

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_non_finite_data_aborts(
        self, method: MethodTag, sine_spec: ProblemSpec, small_grid: Grid
    ) -> None:
        """Test that a nan coefficient aborts the run at step 1."""

        M = small_grid.M
        q = np.zeros(small_grid.size, dtype=np.complex128)
        q[M + 1] = q[M - 1] = np.nan
        init = SpectralState(q=q, p=np.zeros_like(q))

        with pytest.raises(IntegrationAbortedError) as excinfo:
            integrate(method, sine_spec, small_grid, init, 0.1, 1.0)

        assert excinfo.value.step == 1
        assert excinfo.value.method == str(method)

    @pytest.mark.parametrize(
        ("h", "T", "observe_every", "match"),
        [
            (1.5, 3.0, 1, "outside"),
            (0.3, 1.0, 1, "does not divide"),
            (0.1, 1.0, 0, "observe_every"),
        ],
    )
    def test_rejects_arguments(
        self,
        h: float,
        T: float,
        observe_every: int,
        match: str,
        sine_spec: ProblemSpec,
        small_grid: Grid,
        small_state: SpectralState,
    ) -> None:
        """Test rejection of bad step sizes and observation strides."""

        with pytest.raises(ValueError, match=match):
            integrate(
                MethodTag.SLR,
                sine_spec,
                small_grid,
                small_state,
                h,
                T,
                observe_every,
            )


class TestAdvance:
    """Tests for the bare stepping loop."""

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_matches_driver(
        self,
        method: MethodTag,
        sine_spec: ProblemSpec,
        small_grid: Grid,
        small_state: SpectralState,
    ) -> None:
        """Test that advance() ends where integrate() ends."""

        result = integrate(method, sine_spec, small_grid, small_state, 0.1, 1.0)

        final = advance(method, sine_spec, small_grid, small_state, 0.1, 10)

        assert np.array_equal(final.q, result.final.q)
        assert np.array_equal(final.p, result.final.p)
        assert final.t == result.final.t
