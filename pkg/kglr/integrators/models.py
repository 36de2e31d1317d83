from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from kglr.problem.models import SpectralState

# Tolerance on curr.t - prev.t == h
TIME_TOL = 1e-12


class MethodTag(StrEnum):
    """Time integrators available to the driver and the sweeps."""

    # symmetric low-regularity two-step method
    SLR = "SLR"
    # one-step low-regularity method, also the SLR starting procedure
    LR23 = "LR23"
    # classical symmetric trigonometric method (filters phi = 1, psi = sinc)
    TI = "TI"

    @classmethod
    def parse(cls, text: str) -> MethodTag:
        key = text.strip().upper()
        try:
            return cls(key)
        except ValueError:
            msg = f"unknown method '{text}', expected one of {', '.join(cls)}"
            raise ValueError(msg) from None


@dataclass(frozen=True)
class TwoStepState:
    """History window (u_{n-1}, v_{n-1}) -> prev, (u_n, v_n) -> curr.

    ``h`` may be negative: ``reversed()`` walks the recursion backwards.
    """

    prev: SpectralState
    curr: SpectralState
    h: float

    def __post_init__(self) -> None:
        if self.prev.q.shape != self.curr.q.shape:
            msg = "prev and curr live on different grids"
            raise ValueError(msg)
        gap = self.curr.t - self.prev.t
        if abs(gap - self.h) > TIME_TOL * max(1.0, abs(self.curr.t)):
            msg = f"curr.t - prev.t = {gap!r} does not match h = {self.h!r}"
            raise ValueError(msg)

    def reversed(self) -> TwoStepState:
        """Same window read backwards in time: h -> -h, n+1 <-> n-1."""
        return TwoStepState(prev=self.curr, curr=self.prev, h=-self.h)


class Observation(NamedTuple):
    step: int
    t: float
    energy: float
    h1_norm: float
    l2_norm: float


@dataclass
class IntegrationResult:
    method: MethodTag
    final: SpectralState
    steps: int
    f_evals: int
    observations: list[Observation] = field(default_factory=list)
