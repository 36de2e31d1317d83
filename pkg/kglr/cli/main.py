from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import TYPE_CHECKING

from kglr import settings
from kglr.cli.commands import CliCommand, Verb, run_command
from kglr.exceptions import ConfigError

if TYPE_CHECKING:
    from collections.abc import Sequence

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kglr",
        description=(
            "Symmetric low-regularity integrators for the Klein-Gordon "
            "equation: solve, convergence, efficiency, energy-drift and "
            "reversibility experiments."
        ),
    )
    parser.add_argument("verb", choices=[verb.value for verb in Verb])
    parser.add_argument("-c", "--config", type=Path, help="experiment config file")
    parser.add_argument(
        "-o",
        "--out",
        type=Path,
        default=Path("out"),
        help="directory for the result CSVs (default: ./out)",
    )
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a config entry; may be repeated",
    )
    parser.add_argument(
        "-j",
        "--jobs",
        type=int,
        default=settings.JOBS,
        help="parallel sweep points (default: KGLR_JOBS or 1)",
    )
    parser.add_argument("--seed", type=int, help="shorthand for --set seed=S")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=settings.LOG_LEVEL if settings.LOG_LEVEL in LOG_LEVELS else "INFO",
    )
    parser.add_argument(
        "--print-effective-config",
        action="store_true",
        help="print the fully defaulted config and exit",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, format=settings.LOG_FORMAT)

    overrides = list(args.overrides)
    if args.seed is not None:
        overrides.append(f"seed={args.seed}")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")

    try:
        cmd = CliCommand(
            verb=Verb(args.verb),
            config_path=args.config,
            output_dir=args.out,
            overrides=tuple(overrides),
            jobs=args.jobs,
            print_effective_config=args.print_effective_config,
        )
    except ConfigError as exc:
        parser.error(str(exc))
    return run_command(cmd)
