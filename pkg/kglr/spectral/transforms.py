"""
Discrete Fourier transform between grid samples and mode coefficients.

    c_j = (1/2M) sum_{k=-M}^{M-1} w_k exp(-i j x_k),   j = -M..M-1
    w_k = sum_{j=-M}^{M-1} c_j exp(i j x_k)

Real fields go through ``rfft``/``irfft`` and the negative modes are
filled by mirroring, so every coefficient vector produced here is exactly
conjugate symmetric: c[-j] == conj(c[j]) for 0 < j < M and c[-M] real.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    import numpy.typing as npt

    from kglr.spectral.models import CoeffVector, Grid, PhysicalField

# Imaginary residue tolerated when a real field is requested
SYMMETRY_TOL = 1e-12


def _check_length(array: npt.NDArray, grid: Grid, what: str) -> None:
    if array.shape != (grid.size,):
        msg = f"{what} has shape {array.shape}, expected ({grid.size},)"
        raise ValueError(msg)


def symmetry_defect(coeffs: CoeffVector, grid: Grid) -> float:
    """Largest deviation from conjugate symmetry, relative to max |c_j|."""
    M = grid.M
    scale = float(np.max(np.abs(coeffs), initial=0.0))
    if scale == 0.0:
        return 0.0
    positive = coeffs[M + 1 :]
    negative = coeffs[M - 1 : 0 : -1]
    defect = max(
        float(np.max(np.abs(negative - np.conj(positive)), initial=0.0)),
        abs(coeffs[M].imag),
        abs(coeffs[0].imag),
    )
    return defect / scale


def to_spectral(field: PhysicalField, grid: Grid) -> CoeffVector:
    _check_length(field, grid, "field")
    M, N = grid.M, grid.size

    half = np.fft.rfft(np.fft.ifftshift(np.asarray(field, dtype=np.float64))) / N
    coeffs = np.empty(N, dtype=np.complex128)
    coeffs[M:] = half[:M]
    coeffs[1:M] = np.conj(half[M - 1 : 0 : -1])
    coeffs[0] = half[M].real
    coeffs[M] = half[0].real
    return coeffs


def from_spectral(
    coeffs: CoeffVector,
    grid: Grid,
    real: bool = True,
) -> PhysicalField | npt.NDArray[np.complex128]:
    _check_length(coeffs, grid, "coefficient vector")
    M, N = grid.M, grid.size

    if not real:
        return np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(coeffs))) * N

    defect = symmetry_defect(coeffs, grid)
    if defect > SYMMETRY_TOL:
        msg = (
            f"coefficients are not conjugate symmetric (defect {defect:.3e}); "
            "request a complex field with real=False"
        )
        raise ValueError(msg)

    half = np.empty(M + 1, dtype=np.complex128)
    half[:M] = coeffs[M:]
    half[M] = coeffs[0].real
    return np.fft.fftshift(np.fft.irfft(half * N, n=N))
