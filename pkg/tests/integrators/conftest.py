from __future__ import annotations

import pytest

from kglr.problem.initial_data import rough_initial_data
from kglr.problem.models import Nonlinearity, ProblemSpec, SpectralState
from kglr.spectral.models import Grid, make_grid


@pytest.fixture
def grid() -> Grid:
    """Grid with M = 64, the size used by the experiments."""

    return make_grid(64, 0.0)


@pytest.fixture
def small_grid() -> Grid:
    """Grid with M = 16 for fast single-step checks."""

    return make_grid(16, 0.0)


@pytest.fixture
def sine_spec() -> ProblemSpec:
    """Sine-Gordon problem with H^1.5 x H^0.5 data."""

    return ProblemSpec(nonlinearity=Nonlinearity.SINE, theta=1.5, seed=11)


@pytest.fixture
def smooth_spec() -> ProblemSpec:
    """Sine-Gordon problem with smooth (theta = 10) data."""

    return ProblemSpec(nonlinearity=Nonlinearity.SINE, theta=10.0, seed=5)


@pytest.fixture
def linear_spec(sine_spec: ProblemSpec) -> ProblemSpec:
    """The sine problem with the nonlinearity switched off."""

    return sine_spec.without_nonlinearity()


@pytest.fixture
def rough_state(sine_spec: ProblemSpec, grid: Grid) -> SpectralState:
    """Rough initial data on the M = 64 grid."""

    return rough_initial_data(sine_spec, grid)


@pytest.fixture
def small_state(sine_spec: ProblemSpec, small_grid: Grid) -> SpectralState:
    """Rough initial data on the M = 16 grid."""

    return rough_initial_data(sine_spec, small_grid)
