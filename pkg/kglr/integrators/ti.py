"""
Classical trigonometric comparator (Deuflhard-type filters phi = 1, psi = sinc).

    q+ = cos(hW) q + h sinc(hW) p + h^2/2 sinc(hW) F(q)
    p+ = -W sin(hW) q + cos(hW) p + h/2 (cos(hW) F(q) + F(q+))

Symmetric: a step with -h from (q+, p+) returns (q, p). Two evaluations of
the nonlinearity per step.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from kglr.integrators.lr23 import check_step_size
from kglr.problem.models import SpectralState
from kglr.problem.nonlinearity import spectral_f
from kglr.spectral.filters import symbol_table
from kglr.spectral.models import FilterKind

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import Grid


def ti_step(
    spec: ProblemSpec,
    grid: Grid,
    state: SpectralState,
    h: float,
) -> SpectralState:
    check_step_size(h, allow_negative=True)

    cos = symbol_table(FilterKind.COS, h, grid)
    sinc = symbol_table(FilterKind.SINC, h, grid)
    omega_sin = symbol_table(FilterKind.SIN_TIMES_OMEGA, h, grid)

    F = spectral_f(spec, grid, state.q)
    q = cos * state.q + h * sinc * state.p + (0.5 * h * h) * sinc * F
    F_next = spectral_f(spec, grid, q)
    p = -omega_sin * state.q + cos * state.p + (0.5 * h) * (cos * F + F_next)
    return SpectralState(q=q, p=p, t=state.t + h)
