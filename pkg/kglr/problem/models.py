from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, fields, replace
from enum import StrEnum
from typing import TYPE_CHECKING, NamedTuple, Self

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Callable

    import numpy.typing as npt

    from kglr.spectral.models import CoeffVector, Grid

    type Pointwise = Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]]


class Nonlinearity(StrEnum):
    """Registered nonlinearity/potential pairs f = -U'."""

    SINE = "sine"
    CUBIC_DEFOCUSING = "cubic-defocusing"
    # f = 0, U = 0: the nonlinearity switched off
    LINEAR = "linear"

    @classmethod
    def parse(cls, text: str) -> Nonlinearity:
        """Accept ``Sine``, ``CubicDefocusing``, ``cubic-defocusing``, ..."""
        key = text.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value.replace("-", "") == key:
                return member
        msg = f"unknown nonlinearity '{text}'"
        raise ValueError(msg)


class Potential(NamedTuple):
    f: Pointwise
    df: Pointwise
    U: Pointwise


# f = -U', f(0) = 0 and U >= 0 for every entry
POTENTIALS: dict[Nonlinearity, Potential] = {
    Nonlinearity.SINE: Potential(
        f=np.sin,
        df=np.cos,
        U=lambda u: 1.0 + np.cos(u),
    ),
    Nonlinearity.CUBIC_DEFOCUSING: Potential(
        f=lambda u: -(u**3),
        df=lambda u: -3.0 * u**2,
        U=lambda u: 0.25 * u**4,
    ),
    Nonlinearity.LINEAR: Potential(
        f=np.zeros_like,
        df=np.zeros_like,
        U=np.zeros_like,
    ),
}


@dataclass(frozen=True)
class ProblemSpec:
    """Klein-Gordon problem u_tt - u_xx + rho u = f(u) and its initial data."""

    rho: float = 0.0
    nonlinearity: Nonlinearity = Nonlinearity.SINE
    theta: float = 1.0
    data_scale: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.rho >= 0.0:
            msg = f"rho must be nonnegative, got {self.rho}"
            raise ValueError(msg)
        if not self.theta > 0.0:
            msg = f"theta must be positive, got {self.theta}"
            raise ValueError(msg)
        if not self.data_scale > 0.0:
            msg = f"data_scale must be positive, got {self.data_scale}"
            raise ValueError(msg)

    def f(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return POTENTIALS[self.nonlinearity].f(np.asarray(u, dtype=np.float64))

    def df(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return POTENTIALS[self.nonlinearity].df(np.asarray(u, dtype=np.float64))

    def U(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:  # noqa: N802
        return POTENTIALS[self.nonlinearity].U(np.asarray(u, dtype=np.float64))

    def without_nonlinearity(self) -> ProblemSpec:
        return replace(self, nonlinearity=Nonlinearity.LINEAR)


@dataclass(frozen=True)
class CountingProblemSpec(ProblemSpec):
    """ProblemSpec that records every evaluation of f and f'.

    The counter is shared by copies, so it survives ``replace``.
    """

    calls: Counter[str] = field(default_factory=Counter, compare=False, repr=False)

    @classmethod
    def wrap(cls, spec: ProblemSpec) -> CountingProblemSpec:
        """Instrumented copy of ``spec``; counting specs are returned as is."""
        if isinstance(spec, CountingProblemSpec):
            return spec
        return cls(**{f.name: getattr(spec, f.name) for f in fields(ProblemSpec)})

    def f(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
        self.calls["f"] += 1
        return super().f(u)

    def df(self, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
        self.calls["df"] += 1
        return super().df(u)


@dataclass(frozen=True)
class SpectralState:
    """Displacement and velocity coefficients (q, p) at time t."""

    q: CoeffVector
    p: CoeffVector
    t: float = 0.0

    def __post_init__(self) -> None:
        if self.q.shape != self.p.shape:
            msg = f"q and p differ in shape: {self.q.shape} vs {self.p.shape}"
            raise ValueError(msg)

    @classmethod
    def zeros(cls, grid: Grid, t: float = 0.0) -> Self:
        return cls(
            q=np.zeros(grid.size, dtype=np.complex128),
            p=np.zeros(grid.size, dtype=np.complex128),
            t=t,
        )

    def scaled(self, factor: float) -> SpectralState:
        return SpectralState(q=factor * self.q, p=factor * self.p, t=self.t)

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.q).all() and np.isfinite(self.p).all())
