"""Built-in property checks run by ``kglr selftest``."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import TYPE_CHECKING, NamedTuple

from kglr.experiments.metrics import relative_err
from kglr.experiments.runners import reversibility_check
from kglr.integrators.driver import integrate, step_count
from kglr.integrators.models import MethodTag
from kglr.problem.flows import linear_flow
from kglr.problem.initial_data import rough_initial_data
from kglr.problem.models import Nonlinearity, ProblemSpec
from kglr.spectral.models import make_grid

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

LINEAR_TOL = 1e-10
REVERSIBILITY_TOL = 1e-8
# f evaluations per step
EVALS_PER_STEP = {MethodTag.SLR: 1, MethodTag.LR23: 1, MethodTag.TI: 2}


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _linear_exactness(spec: ProblemSpec, M: int) -> Iterator[CheckResult]:
    linear = spec.without_nonlinearity()
    grid = make_grid(M, linear.rho)
    init = rough_initial_data(linear, grid)
    T = 10.0
    exact = linear_flow(grid, init, T)
    for method in MethodTag:
        for h in (0.1, 0.01):
            result = integrate(method, linear, grid, init, h, T, step_count(h, T))
            err = relative_err(result.final, exact, grid)
            yield CheckResult(
                f"linear exactness {method} h={h:g}",
                err <= LINEAR_TOL,
                f"err={err:.2e}",
            )


def _reversibility(spec: ProblemSpec, M: int) -> Iterator[CheckResult]:
    sine = replace(spec, nonlinearity=Nonlinearity.SINE)
    grid = make_grid(M, sine.rho)
    init = rough_initial_data(sine, grid)
    defect = reversibility_check(sine, grid, init, 0.05, 200)
    yield CheckResult(
        "reversibility SLR h=0.05 n=200",
        defect <= REVERSIBILITY_TOL,
        f"defect={defect:.2e}",
    )


def _evaluation_count(spec: ProblemSpec, M: int) -> Iterator[CheckResult]:
    grid = make_grid(M, spec.rho)
    init = rough_initial_data(spec, grid)
    h, T = 0.05, 1.0
    for method, per_step in EVALS_PER_STEP.items():
        result = integrate(method, spec, grid, init, h, T, step_count(h, T))
        expected = per_step * result.steps
        yield CheckResult(
            f"f evaluations {method}",
            result.f_evals == expected,
            f"{result.f_evals} for {result.steps} steps",
        )


def run_selftest(spec: ProblemSpec | None = None, M: int = 64) -> list[CheckResult]:
    """Linear exactness, reversibility and evaluation-count checks."""
    spec = spec or ProblemSpec(theta=1.5)
    results = [
        *_linear_exactness(spec, M),
        *_reversibility(spec, M),
        *_evaluation_count(spec, M),
    ]
    for result in results:
        level = logging.DEBUG if result.passed else logging.WARNING
        logger.log(level, f"{result.name}: {result.detail}")
    return results
