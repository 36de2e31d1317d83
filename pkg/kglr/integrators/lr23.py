"""
One-step low-regularity method, used standalone and as the SLR starter.

    q+ = cos(hW) q + h sinc(hW) p + h^2/2 sinc(hW) F + h^3/2 g(hW) G
    p+ = -W sin(hW) q + cos(hW) p + h/2 (cos(hW) + sinc(hW)) F + h^2/2 sinc(hW) G

with W = Omega, F = F f(u), G = F (f'(u) v) and g(x) = (sinc x - cos x) / x^2,
so that h^3/2 g(hW) = h (sinc(hW) - cos(hW)) / (2 W^2).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from kglr.problem.models import SpectralState
from kglr.problem.nonlinearity import spectral_df_product, spectral_f
from kglr.spectral.filters import symbol_table
from kglr.spectral.models import FilterKind

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import Grid


def check_step_size(h: float, allow_negative: bool = False) -> None:
    size = abs(h) if allow_negative else h
    if not 0.0 < size < 1.0:
        bound = "0 < |h| < 1" if allow_negative else "0 < h < 1"
        msg = f"step size {h!r} outside {bound}"
        raise ValueError(msg)


def lr23_step(
    spec: ProblemSpec,
    grid: Grid,
    state: SpectralState,
    h: float,
) -> SpectralState:
    check_step_size(h)

    cos = symbol_table(FilterKind.COS, h, grid)
    sinc = symbol_table(FilterKind.SINC, h, grid)
    omega_sin = symbol_table(FilterKind.SIN_TIMES_OMEGA, h, grid)
    cos_plus_sinc = symbol_table(FilterKind.COS_PLUS_SINC, h, grid)
    start = symbol_table(FilterKind.START_SINGULAR, h, grid)

    F = spectral_f(spec, grid, state.q)
    G = spectral_df_product(spec, grid, state.q, state.p)

    q = (
        cos * state.q
        + h * sinc * state.p
        + (0.5 * h**2) * sinc * F
        + (0.5 * h**3) * start * G
    )
    p = (
        -omega_sin * state.q
        + cos * state.p
        + (0.5 * h) * cos_plus_sinc * F
        + (0.5 * h**2) * sinc * G
    )
    return SpectralState(q=q, p=p, t=state.t + h)
