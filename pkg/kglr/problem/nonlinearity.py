"""
Nonlinearities applied on the grid and in Fourier space.

    sine              f = sin u    f' = cos u    U = 1 + cos u
    cubic-defocusing  f = -u**3    f' = -3u**2   U = u**4 / 4
    linear            f = 0        f' = 0        U = 0
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from kglr.spectral.transforms import from_spectral, to_spectral

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import CoeffVector, Grid, PhysicalField


def eval_f(spec: ProblemSpec, field: PhysicalField) -> PhysicalField:
    return spec.f(field)


def eval_U(spec: ProblemSpec, u: float) -> float:  # noqa: N802
    return float(spec.U(u))


def spectral_f(spec: ProblemSpec, grid: Grid, q: CoeffVector) -> CoeffVector:
    """F f(F^-1 q): the nonlinearity applied pointwise on the grid."""
    return to_spectral(spec.f(from_spectral(q, grid)), grid)


def spectral_df_product(
    spec: ProblemSpec,
    grid: Grid,
    q: CoeffVector,
    p: CoeffVector,
) -> CoeffVector:
    """F (f'(u) v) with u = F^-1 q and v = F^-1 p, formed on the grid."""
    u = from_spectral(q, grid)
    v = from_spectral(p, grid)
    return to_spectral(spec.df(u) * v, grid)
