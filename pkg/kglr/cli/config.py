"""
Experiment config files.

A config is a flat UTF-8 text file of ``key = value`` lines. Blank lines and
lines starting with ``#`` are ignored, as is anything after `` #`` on a
line. Lists are comma separated. Real numbers may be written as decimals,
fractions (``1/4``) or powers (``2^-9``)::

    schema_version = 1
    kind = convergence
    M = 64
    theta = 1.5
    methods = SLR, LR23, TI
    step_sizes = 2^-4, 2^-5, 2^-6
    T_final = 1

Every key is declared in ``CONFIG_SCHEMA`` as a ``(cast, default)`` pair in
the same manner as an ``environ.Env`` declaration; values are cast with
``environ.Env.parse_value``.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import TYPE_CHECKING, Any, NamedTuple

import environ

from kglr.exceptions import ConfigError
from kglr.experiments.models import ExperimentConfig, ExperimentKind
from kglr.integrators.models import MethodTag
from kglr.problem.models import Nonlinearity

if TYPE_CHECKING:
    from collections.abc import Iterable

REQUIRED = environ.Env.NOTSET


def parse_real(text: str) -> float:
    """Read ``0.25``, ``1e-3``, ``1/4`` or ``2^-9``."""
    value = text.strip()
    try:
        if "/" in value:
            numerator, _, denominator = value.partition("/")
            return float(numerator) / float(denominator)
        if "^" in value:
            base, _, exponent = value.partition("^")
            return float(base) ** float(exponent)
    except (ZeroDivisionError, OverflowError) as exc:
        msg = f"{value!r} is not a finite real number"
        raise ValueError(msg) from exc
    return float(value)


CONFIG_SCHEMA: dict[str, tuple[Any, Any]] = {
    "schema_version": (int, 1),
    "kind": (ExperimentKind.parse, REQUIRED),
    "M": (int, REQUIRED),
    "theta": (parse_real, REQUIRED),
    "rho": (parse_real, 0.0),
    "nonlinearity": (Nonlinearity.parse, Nonlinearity.SINE),
    "seed": (int, 0),
    "methods": ([MethodTag.parse], REQUIRED),
    "step_sizes": ([parse_real], REQUIRED),
    "T_final": (parse_real, REQUIRED),
    "data_scale": (parse_real, 1.0),
    "h_ref": (parse_real, None),
    "observe_every": (int, 1),
    "drift_ratio_max": (parse_real, 2.0),
    "repetitions": (int, 3),
    "reference_gate": (bool, False),
}


class _Entry(NamedTuple):
    raw: str
    line: int | None = None
    column: int | None = None


def _read_entries(text: str) -> dict[str, _Entry]:
    entries: dict[str, _Entry] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        content = line.split(" #", 1)[0].rstrip()
        stripped = content.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        key_column = len(content) - len(stripped) + 1
        if "=" not in stripped:
            msg = "expected 'key = value'"
            raise ConfigError(msg, line=lineno, column=key_column)

        raw_key, _, raw_value = content.partition("=")
        key = raw_key.strip()
        value_column = len(raw_key) + 2 + len(raw_value) - len(raw_value.lstrip())
        if not key:
            msg = "missing key before '='"
            raise ConfigError(msg, line=lineno, column=key_column)
        if key not in CONFIG_SCHEMA:
            msg = "unknown key"
            raise ConfigError(msg, key=key, line=lineno, column=key_column)
        if key in entries:
            msg = f"duplicate key, first set on line {entries[key].line}"
            raise ConfigError(msg, key=key, line=lineno, column=key_column)
        entries[key] = _Entry(raw_value.strip(), lineno, value_column)
    return entries


def _apply_overrides(entries: dict[str, _Entry], overrides: Iterable[str]) -> None:
    for override in overrides:
        key, sep, value = override.partition("=")
        key = key.strip()
        if not sep or not key:
            msg = f"override '{override}' is not of the form key=value"
            raise ConfigError(msg)
        if key not in CONFIG_SCHEMA:
            msg = "unknown key in override"
            raise ConfigError(msg, key=key)
        entries[key] = _Entry(value.strip())


def parse_config_text(text: str, overrides: Iterable[str] = ()) -> ExperimentConfig:
    entries = _read_entries(text)
    _apply_overrides(entries, overrides)

    values: dict[str, Any] = {}
    for key, (cast, default) in CONFIG_SCHEMA.items():
        entry = entries.get(key)
        if entry is None:
            if default is REQUIRED:
                msg = "missing required key"
                raise ConfigError(msg, key=key)
            values[key] = default
            continue
        try:
            value = environ.Env.parse_value(entry.raw, cast)
        except ValueError as exc:
            msg = f"cannot read {entry.raw!r}: {exc}"
            raise ConfigError(msg, key, entry.line, entry.column) from exc
        values[key] = tuple(value) if isinstance(value, list) else value

    try:
        return ExperimentConfig(**values)
    except ConfigError as exc:
        entry = entries.get(exc.key or "")
        if entry is None or entry.line is None:
            raise
        raise ConfigError(exc.message, exc.key, entry.line, entry.column) from exc


def parse_config(path: str | Path, overrides: Iterable[str] = ()) -> ExperimentConfig:
    """Read, cast and validate an experiment config; ``key=value`` overrides win.

    Raises:
        ConfigError: missing file, malformed line, unknown key, bad value or a
            violated invariant. Located errors carry line and column.
    """
    path = Path(path)
    if not path.is_file():
        msg = f"config file '{path}' not found"
        raise ConfigError(msg)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        msg = f"cannot read config file '{path}': {exc}"
        raise ConfigError(msg) from exc
    return parse_config_text(text, overrides)


def _format_value(value: object) -> str:
    match value:
        case bool():
            return "true" if value else "false"
        case float() if math.isfinite(value):
            return repr(value)
        case tuple():
            return ", ".join(_format_value(item) for item in value)
        case _:
            return str(value)


def format_config(cfg: ExperimentConfig) -> str:
    """Fully defaulted config in the input grammar; unset h_ref is left out."""
    lines = []
    for key in CONFIG_SCHEMA:
        value = getattr(cfg, key)
        if value is None:
            continue
        lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + "\n"
