from __future__ import annotations

import pytest

from kglr.problem.initial_data import rough_initial_data
from kglr.problem.models import Nonlinearity, ProblemSpec, SpectralState
from kglr.spectral.models import Grid, make_grid


@pytest.fixture
def grid() -> Grid:
    """Grid with M = 16 and no mass term."""

    return make_grid(16, 0.0)


@pytest.fixture
def sine_spec() -> ProblemSpec:
    """Sine-Gordon problem with H^1.5 x H^0.5 data."""

    return ProblemSpec(nonlinearity=Nonlinearity.SINE, theta=1.5, seed=3)


@pytest.fixture
def linear_spec(sine_spec: ProblemSpec) -> ProblemSpec:
    """The same problem with the nonlinearity switched off."""

    return sine_spec.without_nonlinearity()


@pytest.fixture
def rough_state(sine_spec: ProblemSpec, grid: Grid) -> SpectralState:
    """Normalized rough initial data for the sine problem."""

    return rough_initial_data(sine_spec, grid)
