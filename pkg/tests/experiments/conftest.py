from __future__ import annotations

from typing import TYPE_CHECKING, Any

import pytest

from kglr.experiments.models import ExperimentConfig, ExperimentKind
from kglr.integrators.models import MethodTag

if TYPE_CHECKING:
    from collections.abc import Callable


@pytest.fixture
def make_config() -> Callable[..., ExperimentConfig]:
    """Factory for small, fast convergence configs; keywords override fields."""

    def factory(**overrides: Any) -> ExperimentConfig:  # noqa: ANN401
        values: dict[str, Any] = {
            "kind": ExperimentKind.CONVERGENCE,
            "M": 16,
            "theta": 1.5,
            "methods": (MethodTag.SLR, MethodTag.LR23, MethodTag.TI),
            "step_sizes": (0.1, 0.05),
            "T_final": 1.0,
            "seed": 7,
        }
        values.update(overrides)
        return ExperimentConfig(**values)

    return factory
