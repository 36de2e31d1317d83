from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from kglr.spectral.models import CoeffVector, Grid


def hs_norm(coeffs: CoeffVector, s: float, grid: Grid) -> float:
    """Weighted Sobolev norm (sum_j omega_j**(2s) |c_j|**2) ** (1/2).

    All 2M modes carry unit weight. Modes with omega_j = 0 contribute
    |c_j|**2 when s == 0 (0**0 = 1), nothing when s > 0, and are dropped
    when s < 0.
    """
    power = np.abs(coeffs) ** 2
    if s == 0:
        return float(np.sqrt(power.sum()))

    omega = grid.omega
    nonzero = omega > 0.0
    weights = np.zeros_like(omega)
    weights[nonzero] = omega[nonzero] ** (2.0 * s)
    return float(np.sqrt((weights * power).sum()))
