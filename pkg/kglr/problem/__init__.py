from kglr.problem.energy import discrete_energy
from kglr.problem.flows import linear_flow
from kglr.problem.initial_data import rough_initial_data
from kglr.problem.models import (
    CountingProblemSpec,
    Nonlinearity,
    ProblemSpec,
    SpectralState,
)
from kglr.problem.nonlinearity import eval_f, eval_U, spectral_f

__all__ = [
    "CountingProblemSpec",
    "Nonlinearity",
    "ProblemSpec",
    "SpectralState",
    "discrete_energy",
    "eval_U",
    "eval_f",
    "linear_flow",
    "rough_initial_data",
    "spectral_f",
]
