"""
Symmetric low-regularity two-step method.

    q_{n+1} = 2 cos(hW) q_n - q_{n-1} + h^2 sinc(hW) F(q_n)
    p_{n+1} = -2 W sin(hW) q_n + p_{n-1} + h (cos(hW) + sinc(hW)) F(q_n)

The relation is unchanged under h -> -h, n+1 <-> n-1, so stepping the
reversed window (``TwoStepState.reversed``) is the exact algebraic inverse
of a forward step.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from kglr.integrators.lr23 import lr23_step
from kglr.integrators.models import TwoStepState
from kglr.problem.models import SpectralState
from kglr.problem.nonlinearity import spectral_f
from kglr.spectral.filters import symbol_table
from kglr.spectral.models import FilterKind

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import Grid


def slr_start(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    h: float,
) -> TwoStepState:
    return TwoStepState(prev=init, curr=lr23_step(spec, grid, init, h), h=h)


def slr_step(spec: ProblemSpec, grid: Grid, ts: TwoStepState) -> TwoStepState:
    h = ts.h
    cos = symbol_table(FilterKind.COS, h, grid)
    sinc = symbol_table(FilterKind.SINC, h, grid)
    omega_sin = symbol_table(FilterKind.SIN_TIMES_OMEGA, h, grid)
    cos_plus_sinc = symbol_table(FilterKind.COS_PLUS_SINC, h, grid)

    q_n, p_n = ts.curr.q, ts.curr.p
    F = spectral_f(spec, grid, q_n)

    q = 2.0 * cos * q_n - ts.prev.q + (h * h) * sinc * F
    p = -2.0 * omega_sin * q_n + ts.prev.p + h * cos_plus_sinc * F
    return TwoStepState(
        prev=ts.curr,
        curr=SpectralState(q=q, p=p, t=ts.curr.t + h),
        h=h,
    )


def slr_step_back(spec: ProblemSpec, grid: Grid, ts: TwoStepState) -> TwoStepState:
    """Undo one ``slr_step``: (n, n+1) -> (n-1, n)."""
    return slr_step(spec, grid, ts.reversed()).reversed()
