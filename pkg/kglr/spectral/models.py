from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
import numpy.typing as npt

# Fourier coefficients indexed by mode j = -M..M-1 (array index j + M)
type CoeffVector = npt.NDArray[np.complex128]
# Samples u(x_k) at k = -M..M-1 (array index k + M)
type PhysicalField = npt.NDArray[np.float64]


class FilterKind(StrEnum):
    """Scalar symbols applied diagonally to the frequency operator."""

    COS = "cos"
    SINC = "sinc"
    SIN_TIMES_OMEGA = "sin-times-omega"
    COS_PLUS_SINC = "cos-plus-sinc"
    START_SINGULAR = "start-singular"


@dataclass(frozen=True)
class Grid:
    """Uniform grid on the torus [-pi, pi) with 2M points and its frequencies.

    ``omega[j + M] = sqrt(j**2 + rho)`` are the eigenvalues of the square root
    of ``-d2/dx2 + rho``. Equality and hashing use ``(M, rho)`` only; the
    arrays are derived from them and are read-only.
    """

    M: int
    rho: float
    points: npt.NDArray[np.float64] = field(repr=False, compare=False)
    omega: npt.NDArray[np.float64] = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return 2 * self.M

    @property
    def modes(self) -> npt.NDArray[np.int64]:
        return np.arange(-self.M, self.M)

    def index(self, j: int) -> int:
        """Array position of mode ``j``."""
        if not -self.M <= j < self.M:
            msg = f"mode {j} outside -{self.M}..{self.M - 1}"
            raise IndexError(msg)
        return j + self.M

    def delta(self, j: int, value: complex = 1.0) -> CoeffVector:
        """Coefficient vector with a single nonzero entry at mode ``j``."""
        c = np.zeros(self.size, dtype=np.complex128)
        c[self.index(j)] = value
        return c


def make_grid(M: int, rho: float) -> Grid:
    if M < 2:  # noqa: PLR2004
        msg = f"M must be at least 2, got {M}"
        raise ValueError(msg)
    if not rho >= 0.0:
        msg = f"rho must be nonnegative, got {rho}"
        raise ValueError(msg)

    modes = np.arange(-M, M)
    points = modes * (np.pi / M)
    omega = np.sqrt(modes.astype(np.float64) ** 2 + rho)
    points.flags.writeable = False
    omega.flags.writeable = False
    return Grid(M=int(M), rho=float(rho), points=points, omega=omega)
