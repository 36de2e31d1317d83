from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple, NoReturn

from kglr.exceptions import ConfigError
from kglr.integrators.driver import STEP_COUNT_TOL
from kglr.integrators.models import MethodTag
from kglr.problem.models import Nonlinearity, ProblemSpec
from kglr.spectral.models import Grid, make_grid

SCHEMA_VERSION = 1
# Default reference step relative to the smallest sweep step
REFERENCE_REFINEMENT = 8
# h_ref must be below min(step_sizes) / REFERENCE_MARGIN
REFERENCE_MARGIN = 4


class ExperimentKind(StrEnum):
    CONVERGENCE = "convergence"
    EFFICIENCY = "efficiency"
    ENERGY_DRIFT = "energy-drift"
    REVERSIBILITY = "reversibility"

    @classmethod
    def parse(cls, text: str) -> ExperimentKind:
        """Accept ``EnergyDrift``, ``energy-drift``, ``energy_drift``, ..."""
        key = text.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value.replace("-", "") == key:
                return member
        msg = f"unknown experiment kind '{text}'"
        raise ValueError(msg)


@dataclass(frozen=True)
class ExperimentConfig:
    """Declarative description of one experiment sweep."""

    kind: ExperimentKind
    M: int
    theta: float
    methods: tuple[MethodTag, ...]
    step_sizes: tuple[float, ...]
    T_final: float
    rho: float = 0.0
    nonlinearity: Nonlinearity = Nonlinearity.SINE
    seed: int = 0
    data_scale: float = 1.0
    h_ref: float | None = None
    observe_every: int = 1
    drift_ratio_max: float = 2.0
    repetitions: int = 3
    reference_gate: bool = False
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        self.validate()

    @property
    def reference_step(self) -> float:
        if self.h_ref is not None:
            return self.h_ref
        return min(self.step_sizes) / REFERENCE_REFINEMENT

    def problem(self) -> ProblemSpec:
        return ProblemSpec(
            rho=self.rho,
            nonlinearity=self.nonlinearity,
            theta=self.theta,
            data_scale=self.data_scale,
            seed=self.seed,
        )

    def grid(self) -> Grid:
        return make_grid(self.M, self.rho)

    def validate(self) -> None:  # noqa: C901, PLR0912
        """Check every invariant; the first violation raises ConfigError."""

        def fail(key: str, message: str) -> NoReturn:
            raise ConfigError(message, key=key)

        if self.schema_version != SCHEMA_VERSION:
            fail("schema_version", f"unsupported schema version {self.schema_version}")
        if self.M < 2:  # noqa: PLR2004
            fail("M", f"must be at least 2, got {self.M}")
        if not self.theta > 0.0:
            fail("theta", f"must be positive, got {self.theta}")
        if not self.rho >= 0.0:
            fail("rho", f"must be nonnegative, got {self.rho}")
        if not self.data_scale > 0.0:
            fail("data_scale", f"must be positive, got {self.data_scale}")
        if not (math.isfinite(self.T_final) and self.T_final > 0.0):
            fail("T_final", f"must be positive, got {self.T_final}")
        if not self.methods:
            fail("methods", "at least one method is required")
        if not self.step_sizes:
            fail("step_sizes", "at least one step size is required")
        for h in self.step_sizes:
            if not 0.0 < h < 1.0:
                fail("step_sizes", f"step size {h!r} outside (0, 1)")
            if not _divides(h, self.T_final):
                fail("step_sizes", f"step size {h!r} does not divide T_final")
        if self.observe_every < 1:
            fail("observe_every", f"must be positive, got {self.observe_every}")
        if self.repetitions < 1:
            fail("repetitions", f"must be a positive integer, got {self.repetitions}")
        if not self.drift_ratio_max > 0.0:
            fail("drift_ratio_max", f"must be positive, got {self.drift_ratio_max}")
        if self.h_ref is not None and not self.h_ref > 0.0:
            fail("h_ref", f"must be positive, got {self.h_ref}")

        if self.kind in {ExperimentKind.CONVERGENCE, ExperimentKind.EFFICIENCY}:
            h_ref = self.reference_step
            if not h_ref < min(self.step_sizes) / REFERENCE_MARGIN:
                fail("h_ref", f"{h_ref!r} must be below min(step_sizes)/4")
            if not _divides(h_ref, self.T_final):
                fail("h_ref", f"{h_ref!r} does not divide T_final")


def _divides(h: float, T: float) -> bool:
    n = round(T / h)
    return n >= 1 and abs(n * h - T) <= STEP_COUNT_TOL * T


class EnergySample(NamedTuple):
    t: float
    rel_drift: float
    # |H - H0| / eps**2 with eps the small-data size of the initial state
    scaled_drift: float


@dataclass
class RunRecord:
    method: MethodTag
    h: float
    err: float
    wall_seconds: float | None = None
    estimated_order: float | None = None
    energy_series: list[EnergySample] | None = None
    steps: int = 0
    f_evals: int = 0
    aborted: bool = False

    @property
    def finite(self) -> bool:
        values = [self.err]
        if self.wall_seconds is not None:
            values.append(self.wall_seconds)
        return not self.aborted and all(math.isfinite(v) for v in values)


@dataclass
class DriftSummary:
    method: MethodTag
    h: float
    max_first_half: float
    max_second_half: float
    trend_ratio: float
    bounded: bool
