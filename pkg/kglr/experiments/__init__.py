from kglr.experiments.metrics import estimate_order, relative_err, summarize_drift
from kglr.experiments.models import (
    DriftSummary,
    EnergySample,
    ExperimentConfig,
    ExperimentKind,
    RunRecord,
)
from kglr.experiments.reference import (
    ReferenceCache,
    check_reference_refinement,
    reference_solution,
)
from kglr.experiments.runners import (
    drift_summaries,
    reversibility_check,
    run_convergence,
    run_efficiency,
    run_energy_drift,
    run_reversibility,
)

__all__ = [
    "DriftSummary",
    "EnergySample",
    "ExperimentConfig",
    "ExperimentKind",
    "ReferenceCache",
    "RunRecord",
    "check_reference_refinement",
    "drift_summaries",
    "estimate_order",
    "reference_solution",
    "relative_err",
    "reversibility_check",
    "run_convergence",
    "run_efficiency",
    "run_energy_drift",
    "run_reversibility",
    "summarize_drift",
]
