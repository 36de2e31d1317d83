from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from kglr.spectral.norms import hs_norm
from kglr.spectral.transforms import from_spectral

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec, SpectralState
    from kglr.spectral.models import Grid


def discrete_energy(spec: ProblemSpec, grid: Grid, state: SpectralState) -> float:
    """H_M(q, p) = 1/2 (|p|_L2**2 + |q|_H1**2) + mean_k U(u(x_k))."""
    kinetic = hs_norm(state.p, 0.0, grid) ** 2
    elastic = hs_norm(state.q, 1.0, grid) ** 2
    potential = float(np.mean(spec.U(from_spectral(state.q, grid))))
    return 0.5 * (kinetic + elastic) + potential


def data_size(grid: Grid, state: SpectralState) -> float:
    """(|q|_{H^5/4}**2 + |p|_{H^1/4}**2) ** (1/2), the small-data size epsilon."""
    return float(
        np.hypot(hs_norm(state.q, 1.25, grid), hs_norm(state.p, 0.25, grid)),
    )
