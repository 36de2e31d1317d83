"""
Operator symbols: scalar functions of h*omega applied diagonally in Fourier
space.

All symbols are total. ``sinc`` and the starting-value symbol
``g(x) = (sinc x - cos x) / x**2`` have removable singularities at 0 and
switch to truncated Taylor series below ``TAYLOR_THRESHOLD``. Away from 0,
``g`` is evaluated as ``j1(x) / x`` with the spherical Bessel function j1,
which avoids the cancellation of the direct quotient.

Negative ``h`` is accepted and yields the time-reversed symbol; the
integrators rely on this for backward steps.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import spherical_jn

from kglr.spectral.models import FilterKind

if TYPE_CHECKING:
    import numpy.typing as npt

    from kglr.spectral.models import CoeffVector, Grid

TAYLOR_THRESHOLD = 1e-4

type RealArray = npt.NDArray[np.float64]


def sinc(x: float | RealArray) -> RealArray:
    """sin(x)/x with sinc(0) = 1."""
    x = np.asarray(x, dtype=np.float64)
    small = np.abs(x) < TAYLOR_THRESHOLD
    x2 = x * x
    series = 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0))
    safe = np.where(small, 1.0, x)
    return np.where(small, series, np.sin(safe) / safe)


def start_symbol(x: float | RealArray) -> RealArray:
    """g(x) = (sinc x - cos x) / x**2 with g(0) = 1/3."""
    x = np.asarray(x, dtype=np.float64)
    small = np.abs(x) < TAYLOR_THRESHOLD
    x2 = x * x
    series = 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 - x2 * x2 * x2 / 45360.0
    # g is even; spherical_jn is only defined for x >= 0
    safe = np.where(small, 1.0, np.abs(x))
    return np.where(small, series, spherical_jn(1, safe) / safe)


def _evaluate(
    kind: FilterKind,
    h: float,
    omega: float | RealArray,
) -> RealArray:
    omega = np.asarray(omega, dtype=np.float64)
    x = h * omega
    match kind:
        case FilterKind.COS:
            return np.cos(x)
        case FilterKind.SINC:
            return sinc(x)
        case FilterKind.SIN_TIMES_OMEGA:
            return omega * np.sin(x)
        case FilterKind.COS_PLUS_SINC:
            return np.cos(x) + sinc(x)
        case FilterKind.START_SINGULAR:
            return start_symbol(x)
    msg = f"unknown filter kind {kind!r}"
    raise ValueError(msg)


def eval_filter(kind: FilterKind, h: float, omega: float) -> float:
    """Value of the symbol ``kind`` at step ``h`` and frequency ``omega``.

    For START_SINGULAR this is g(h*omega); the applied starting-value
    operator (sinc - cos)/(2*Omega**2) equals (h**2/2) * g(h*Omega).
    """
    return float(_evaluate(FilterKind(kind), h, omega))


@lru_cache(maxsize=256)
def symbol_table(kind: FilterKind, h: float, grid: Grid) -> RealArray:
    """Symbol evaluated on every mode of ``grid``; cached and read-only."""
    table = _evaluate(kind, h, grid.omega)
    table.flags.writeable = False
    return table


def apply_symbol(
    kind: FilterKind,
    h: float,
    grid: Grid,
    coeffs: CoeffVector,
) -> CoeffVector:
    if coeffs.shape != (grid.size,):
        msg = f"coefficient vector has shape {coeffs.shape}, expected ({grid.size},)"
        raise ValueError(msg)
    return symbol_table(kind, h, grid) * coeffs
