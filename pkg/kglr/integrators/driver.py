from __future__ import annotations

import logging
from collections import deque
from typing import TYPE_CHECKING

from kglr.exceptions import IntegrationAbortedError
from kglr.integrators.lr23 import check_step_size, lr23_step
from kglr.integrators.models import IntegrationResult, MethodTag, Observation
from kglr.integrators.slr import slr_start, slr_step
from kglr.integrators.ti import ti_step
from kglr.problem.energy import discrete_energy
from kglr.problem.models import CountingProblemSpec
from kglr.spectral.norms import hs_norm

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

    from kglr.problem.models import ProblemSpec, SpectralState
    from kglr.spectral.models import Grid

    type Observer = Callable[[int, SpectralState], None]

logger = logging.getLogger(__name__)

# Allowed mismatch |n h - T| / T when rounding T/h to a step count
STEP_COUNT_TOL = 1e-9


def step_count(h: float, T: float) -> int:
    """n = round(T/h), rejecting T/h that is not an integer."""
    if not T > 0.0:
        msg = f"final time must be positive, got {T!r}"
        raise ValueError(msg)
    n = round(T / h)
    if n < 1 or abs(n * h - T) > STEP_COUNT_TOL * T:
        msg = f"step size {h!r} does not divide final time {T!r}"
        raise ValueError(msg)
    return n


def observe(
    spec: ProblemSpec,
    grid: Grid,
    step: int,
    state: SpectralState,
) -> Observation:
    return Observation(
        step=step,
        t=state.t,
        energy=discrete_energy(spec, grid, state),
        h1_norm=hs_norm(state.q, 1.0, grid),
        l2_norm=hs_norm(state.p, 0.0, grid),
    )


def _trajectory(
    method: MethodTag,
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    h: float,
    n: int,
) -> Iterator[SpectralState]:
    """States after steps 1..n."""
    match method:
        case MethodTag.SLR:
            ts = slr_start(spec, grid, init, h)
            yield ts.curr
            for _ in range(n - 1):
                ts = slr_step(spec, grid, ts)
                yield ts.curr
        case MethodTag.LR23 | MethodTag.TI:
            step = lr23_step if method is MethodTag.LR23 else ti_step
            state = init
            for _ in range(n):
                state = step(spec, grid, state, h)
                yield state


def advance(
    method: MethodTag,
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    h: float,
    n: int,
) -> SpectralState:
    """State after ``n`` steps of the bare stepping loop, without observations."""
    return deque(_trajectory(MethodTag(method), spec, grid, init, h, n), maxlen=1)[0]


def integrate(
    method: MethodTag,
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    h: float,
    T: float,
    observe_every: int = 1,
    observer: Observer | None = None,
) -> IntegrationResult:
    """Advance ``init`` by n = T/h steps of ``method``.

    Observations (time, energy, H1 norm of q, L2 norm of p) are taken at
    step 0, every ``observe_every`` steps and at the final step. ``observer``,
    when given, is called with (step, state) at the same points.

    Raises:
        ValueError: h outside (0, 1) or h does not divide T.
        IntegrationAbortedError: a coefficient became inf or nan.
    """
    method = MethodTag(method)
    check_step_size(h)
    if observe_every < 1:
        msg = f"observe_every must be a positive integer, got {observe_every}"
        raise ValueError(msg)
    n = step_count(h, T)

    counting = CountingProblemSpec.wrap(spec)
    evals_before = counting.calls["f"]

    observations = [observe(spec, grid, 0, init)]
    if observer is not None:
        observer(0, init)

    state = init
    trajectory = _trajectory(method, counting, grid, init, h, n)
    for step, state in enumerate(trajectory, 1):
        if not state.is_finite():
            logger.error(f"{method}: non-finite coefficients at step {step}")
            raise IntegrationAbortedError(str(method), step, state.t)
        if step % observe_every == 0 or step == n:
            observations.append(observe(spec, grid, step, state))
            if observer is not None:
                observer(step, state)

    f_evals = counting.calls["f"] - evals_before
    logger.debug(f"{method}: {n} steps of h={h:g}, {f_evals} evaluations of f")
    return IntegrationResult(
        method=method,
        final=state,
        steps=n,
        f_evals=f_evals,
        observations=observations,
    )
