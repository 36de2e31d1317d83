from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

from kglr import settings
from kglr.cli import output
from kglr.cli.config import format_config, parse_config
from kglr.cli.output import write_csv
from kglr.cli.selftest import run_selftest
from kglr.exceptions import ConfigError, IntegrationAbortedError
from kglr.experiments.models import ExperimentKind
from kglr.experiments.reference import ReferenceCache
from kglr.experiments.runners import (
    drift_summaries,
    run_convergence,
    run_efficiency,
    run_energy_drift,
    run_reversibility,
)
from kglr.integrators.driver import integrate
from kglr.problem.initial_data import rough_initial_data
from kglr.spectral.transforms import from_spectral

if TYPE_CHECKING:
    from pathlib import Path

    from kglr.experiments.models import ExperimentConfig, RunRecord

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUN_FAILED = 1
EXIT_USAGE = 2


class Verb(StrEnum):
    SOLVE = "solve"
    CONVERGENCE = "convergence"
    EFFICIENCY = "efficiency"
    ENERGY_DRIFT = "energy-drift"
    REVERSIBILITY = "reversibility"
    SELFTEST = "selftest"

    @property
    def kind(self) -> ExperimentKind | None:
        """Experiment kind the verb runs; None for verbs taking any config."""
        try:
            return ExperimentKind(self.value)
        except ValueError:
            return None


@dataclass(frozen=True)
class CliCommand:
    verb: Verb
    config_path: Path | None
    output_dir: Path
    overrides: tuple[str, ...] = ()
    jobs: int = 1
    print_effective_config: bool = False

    def __post_init__(self) -> None:
        if self.config_path is None and self.verb is not Verb.SELFTEST:
            msg = f"'{self.verb}' needs --config"
            raise ConfigError(msg)


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"kglr: {message}\n")
    return code


def _records_exit_code(records: list[RunRecord]) -> int:
    bad = [r for r in records if not r.finite]
    if not bad:
        return EXIT_OK
    first = bad[0]
    return _fail(
        f"{len(bad)} run(s) aborted or non-finite, "
        f"first {first.method} h={first.h:g}",
        EXIT_RUN_FAILED,
    )


def _solve(cfg: ExperimentConfig, out: Path) -> int:
    spec, grid = cfg.problem(), cfg.grid()
    init = rough_initial_data(spec, grid)
    method, h = cfg.methods[0], cfg.step_sizes[0]
    try:
        result = integrate(
            method, spec, grid, init, h, cfg.T_final, cfg.observe_every
        )
    except IntegrationAbortedError as exc:
        return _fail(str(exc), EXIT_RUN_FAILED)

    write_csv([result], output.OBSERVATIONS, out / "observations.csv")
    u = from_spectral(result.final.q, grid)
    v = from_spectral(result.final.p, grid)
    rows = zip(grid.points.tolist(), u.tolist(), v.tolist(), strict=True)
    write_csv(rows, output.SOLUTION, out / "solution.csv")
    return EXIT_OK


def _write_drift_series(
    cfg: ExperimentConfig, records: list[RunRecord], out: Path
) -> None:
    """One pair of series files per step size, suffixed ``_h<h>`` when several."""
    step_sizes = list(dict.fromkeys(cfg.step_sizes))
    for h in step_sizes:
        batch = [r for r in records if r.h == h]
        suffix = f"_h{h!r}" if len(step_sizes) > 1 else ""
        write_csv(batch, output.ENERGY_DRIFT, out / f"energy_drift{suffix}.csv")
        write_csv(
            batch,
            output.ENERGY_DRIFT_SCALED,
            out / f"energy_drift_scaled{suffix}.csv",
        )


def _run_experiment(cmd: CliCommand, cfg: ExperimentConfig) -> int:
    out = cmd.output_dir
    cache = ReferenceCache(settings.CACHE_DIR) if settings.CACHE_DIR else None
    match cfg.kind:
        case ExperimentKind.CONVERGENCE:
            records = run_convergence(cfg, cmd.jobs, cache)
            write_csv(records, output.CONVERGENCE, out / "convergence.csv")
        case ExperimentKind.EFFICIENCY:
            records = run_efficiency(cfg, cache)
            write_csv(records, output.EFFICIENCY, out / "efficiency.csv")
        case ExperimentKind.ENERGY_DRIFT:
            records = run_energy_drift(cfg, cmd.jobs)
            _write_drift_series(cfg, records, out)
            write_csv(
                drift_summaries(cfg, records),
                output.ENERGY_DRIFT_SUMMARY,
                out / "energy_drift_summary.csv",
            )
        case ExperimentKind.REVERSIBILITY:
            records = run_reversibility(cfg, cmd.jobs)
            write_csv(records, output.REVERSIBILITY, out / "reversibility.csv")
    return _records_exit_code(records)


def _selftest(cmd: CliCommand) -> int:
    spec, M = None, 64
    if cmd.config_path is not None:
        cfg = parse_config(cmd.config_path, cmd.overrides)
        spec, M = cfg.problem(), cfg.M
    results = run_selftest(spec, M)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        sys.stdout.write(f"{status} {result.name} ({result.detail})\n")
    passed = sum(r.passed for r in results)
    sys.stdout.write(f"selftest: {passed}/{len(results)} passed\n")
    return EXIT_OK if passed == len(results) else EXIT_RUN_FAILED


def run_command(cmd: CliCommand) -> int:
    """Run one CLI command and return the process exit code.

    0 on success, 1 when any run aborted or produced a non-finite result,
    2 for config, usage and output-directory errors. Failures print a single
    diagnostic line on stderr.
    """
    try:
        if cmd.verb is Verb.SELFTEST:
            return _selftest(cmd)

        if cmd.config_path is None:
            msg = f"'{cmd.verb}' needs --config"
            raise ConfigError(msg)
        cfg = parse_config(cmd.config_path, cmd.overrides)
        if cmd.print_effective_config:
            sys.stdout.write(format_config(cfg))
            return EXIT_OK
        if cmd.verb.kind is not None and cfg.kind is not cmd.verb.kind:
            msg = f"'{cmd.verb}' cannot run a '{cfg.kind}' config"
            raise ConfigError(msg, key="kind")

        cmd.output_dir.mkdir(parents=True, exist_ok=True)
        logger.info(f"{cmd.verb}: writing results to {cmd.output_dir}")
        if cmd.verb is Verb.SOLVE:
            return _solve(cfg, cmd.output_dir)
        return _run_experiment(cmd, cfg)
    except ConfigError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except IntegrationAbortedError as exc:
        return _fail(f"reference run failed: {exc}", EXIT_RUN_FAILED)
    except OSError as exc:
        return _fail(f"cannot write results: {exc}", EXIT_USAGE)
