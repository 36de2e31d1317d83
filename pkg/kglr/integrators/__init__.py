from kglr.integrators.driver import advance, integrate, step_count
from kglr.integrators.lr23 import lr23_step
from kglr.integrators.models import (
    IntegrationResult,
    MethodTag,
    Observation,
    TwoStepState,
)
from kglr.integrators.slr import slr_start, slr_step, slr_step_back
from kglr.integrators.ti import ti_step

__all__ = [
    "IntegrationResult",
    "MethodTag",
    "Observation",
    "TwoStepState",
    "advance",
    "integrate",
    "lr23_step",
    "slr_start",
    "slr_step",
    "slr_step_back",
    "step_count",
    "ti_step",
]
