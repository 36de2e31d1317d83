"""
CSV writers for experiment results.

Files are UTF-8 with LF line endings and a header row. Reals are written
with 17 significant digits in exponent form, so equal inputs give equal
bytes and double precision round-trips; missing values are empty fields.
"""

from __future__ import annotations

import csv
import math
from enum import Enum
from typing import TYPE_CHECKING, Any, NamedTuple

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence
    from pathlib import Path

    from kglr.experiments.models import DriftSummary, RunRecord
    from kglr.integrators.models import IntegrationResult

    type Row = Sequence[object]


class CsvSchema(NamedTuple):
    """Column names plus a function turning one record into its rows."""

    columns: tuple[str, ...]
    rows: Callable[[Any], Iterable[Row]]


def format_field(value: object) -> str:
    match value:
        case None:
            return ""
        case bool():
            return "true" if value else "false"
        case Enum():
            return str(value.value)
        case int():
            return str(value)
        case float() if math.isnan(value):
            return "nan"
        case float() if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        case float():
            return f"{value:.16e}"
        case _:
            return str(value)


def write_csv(records: Iterable[Any], schema: CsvSchema, path: Path) -> None:
    """Write ``records`` to ``path``; an empty iterable gives a header-only file."""
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(schema.columns)
        for record in records:
            for row in schema.rows(record):
                if len(row) != len(schema.columns):
                    msg = f"row {row!r} does not match columns {schema.columns}"
                    raise ValueError(msg)
                writer.writerow([format_field(v) for v in row])


def _convergence_rows(r: RunRecord) -> list[Row]:
    return [(r.method, r.h, r.err, r.estimated_order)]


def _efficiency_rows(r: RunRecord) -> list[Row]:
    return [
        (r.method, r.h, r.err, r.estimated_order, r.wall_seconds, r.steps, r.f_evals),
    ]


def _drift_rows(r: RunRecord) -> list[Row]:
    return [(r.method, s.t, s.rel_drift) for s in r.energy_series or []]


def _scaled_drift_rows(r: RunRecord) -> list[Row]:
    return [(r.method, s.t, s.scaled_drift) for s in r.energy_series or []]


def _summary_rows(s: DriftSummary) -> list[Row]:
    return [
        (
            s.method,
            s.h,
            s.max_first_half,
            s.max_second_half,
            s.trend_ratio,
            s.bounded,
        ),
    ]


def _reversibility_rows(r: RunRecord) -> list[Row]:
    return [(r.method, r.h, r.steps, r.err)]


def _observation_rows(result: IntegrationResult) -> list[Row]:
    return [
        (result.method, o.t, o.energy, o.h1_norm, o.l2_norm)
        for o in result.observations
    ]


def _identity_rows(row: Row) -> list[Row]:
    return [row]


CONVERGENCE = CsvSchema(("method", "h", "err", "order"), _convergence_rows)
EFFICIENCY = CsvSchema(
    ("method", "h", "err", "order", "wall_seconds", "steps", "f_evals"),
    _efficiency_rows,
)
ENERGY_DRIFT = CsvSchema(("method", "t", "rel_drift"), _drift_rows)
ENERGY_DRIFT_SCALED = CsvSchema(("method", "t", "scaled_drift"), _scaled_drift_rows)
ENERGY_DRIFT_SUMMARY = CsvSchema(
    (
        "method",
        "h",
        "max_first_half",
        "max_second_half",
        "trend_ratio",
        "bounded",
    ),
    _summary_rows,
)
REVERSIBILITY = CsvSchema(("method", "h", "n_steps", "defect"), _reversibility_rows)
OBSERVATIONS = CsvSchema(
    ("method", "t", "energy", "h1_norm", "l2_norm"),
    _observation_rows,
)
# rows are (x, u, v) tuples
SOLUTION = CsvSchema(("x", "u", "v"), _identity_rows)
