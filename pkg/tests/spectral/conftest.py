from __future__ import annotations

import numpy as np
import pytest

from kglr.spectral.models import Grid, make_grid


@pytest.fixture
def grid() -> Grid:
    """Eight-point grid without mass term."""

    return make_grid(4, 0.0)


@pytest.fixture
def massive_grid() -> Grid:
    """Grid with rho = 1, so every frequency is positive."""

    return make_grid(4, 1.0)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for random test fields."""

    return np.random.default_rng(20240601)
