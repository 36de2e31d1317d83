from __future__ import annotations

from typing import TYPE_CHECKING

from kglr.problem.models import SpectralState
from kglr.spectral.filters import symbol_table
from kglr.spectral.models import FilterKind

if TYPE_CHECKING:
    from kglr.spectral.models import Grid


def linear_flow(grid: Grid, state: SpectralState, t: float) -> SpectralState:
    """Exact flow of u_tt - u_xx + rho u = 0 over time ``t`` (any sign)."""
    cos = symbol_table(FilterKind.COS, t, grid)
    sinc = symbol_table(FilterKind.SINC, t, grid)
    omega_sin = symbol_table(FilterKind.SIN_TIMES_OMEGA, t, grid)

    q = cos * state.q + t * sinc * state.p
    p = -omega_sin * state.q + cos * state.p
    return SpectralState(q=q, p=p, t=state.t + t)
