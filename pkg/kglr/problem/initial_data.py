"""
Random rough initial data in H^theta x H^(theta-1), normalised so that
|q|_H1 = |p|_L2 = data_scale.

The generator is numpy's PCG64. ``SeedSequence(seed).spawn(2)`` gives one
independent stream for q and one for p. Each stream draws, in order, the
real parts of modes 1..M-1, their imaginary parts, then the real zero mode,
all uniform on [-1, 1]. Negative modes are mirrored, the Nyquist mode -M is
zero.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from kglr.problem.models import SpectralState
from kglr.spectral.norms import hs_norm

if TYPE_CHECKING:
    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import CoeffVector, Grid

logger = logging.getLogger(__name__)

# Redraws allowed before giving up on a zero-norm sample
MAX_REDRAWS = 8


def _draw(
    rng: np.random.Generator,
    grid: Grid,
    decay: float,
    s: float,
) -> CoeffVector:
    M = grid.M
    bracket = np.arange(1, M, dtype=np.float64)
    weights = bracket ** (-decay - 0.5)

    for attempt in range(MAX_REDRAWS):
        real = rng.uniform(-1.0, 1.0, size=M - 1)
        imag = rng.uniform(-1.0, 1.0, size=M - 1)
        zero = rng.uniform(-1.0, 1.0)

        coeffs = np.zeros(grid.size, dtype=np.complex128)
        positive = (real + 1j * imag) * weights
        coeffs[M + 1 :] = positive
        coeffs[M - 1 : 0 : -1] = np.conj(positive)
        coeffs[M] = zero

        norm = hs_norm(coeffs, s, grid)
        if norm > 0.0:
            return coeffs / norm
        logger.warning(f"degenerate draw with zero H^{s} norm (attempt {attempt})")

    msg = f"could not draw initial data with nonzero H^{s} norm"
    raise RuntimeError(msg)


def rough_initial_data(spec: ProblemSpec, grid: Grid) -> SpectralState:
    q_seq, p_seq = np.random.SeedSequence(spec.seed).spawn(2)
    q = _draw(np.random.Generator(np.random.PCG64(q_seq)), grid, spec.theta, 1.0)
    p = _draw(
        np.random.Generator(np.random.PCG64(p_seq)),
        grid,
        spec.theta - 1.0,
        0.0,
    )
    logger.debug(
        f"initial data: M={grid.M} theta={spec.theta} seed={spec.seed} "
        f"scale={spec.data_scale}",
    )
    return SpectralState(q=q, p=p).scaled(spec.data_scale)
