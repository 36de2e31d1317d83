"""
Reference trajectories for the error sweeps.

No closed-form solution exists for a nonlinear f, so the reference is the
SLR trajectory at a much smaller step h_ref. References are optionally kept
in an on-disk cache of ``.npz`` files keyed by a content hash of everything
that determines the trajectory.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import zipfile
from dataclasses import asdict
from typing import TYPE_CHECKING

import numpy as np

from kglr.exceptions import ReferenceCacheError
from kglr.experiments.metrics import relative_err
from kglr.integrators.driver import integrate, step_count
from kglr.integrators.models import MethodTag
from kglr.problem.models import SpectralState

if TYPE_CHECKING:
    from pathlib import Path

    from kglr.problem.models import ProblemSpec
    from kglr.spectral.models import Grid

logger = logging.getLogger(__name__)

CACHE_MAGIC = "kglr-reference"
CACHE_VERSION = 1
# Largest acceptable change of the reference under halving h_ref,
# relative to the smallest sweep error
REFINEMENT_TOLERANCE = 0.1


def reference_key(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    T: float,
    h_ref: float,
) -> str:
    spec_fields = {k: str(v) for k, v in asdict(spec).items() if k != "calls"}
    header = json.dumps(
        {
            "version": CACHE_VERSION,
            "M": grid.M,
            "rho": repr(float(grid.rho)),
            "spec": spec_fields,
            "T": repr(float(T)),
            "h_ref": repr(float(h_ref)),
        },
        sort_keys=True,
    )
    digest = hashlib.sha256(header.encode())
    digest.update(np.ascontiguousarray(init.q).tobytes())
    digest.update(np.ascontiguousarray(init.p).tobytes())
    return digest.hexdigest()


class ReferenceCache:
    """Directory of ``<key>.npz`` reference states."""

    def __init__(self, directory: Path) -> None:
        self.directory = directory

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.npz"

    def load(self, key: str) -> SpectralState | None:
        path = self.path(key)
        if not path.exists():
            return None
        try:
            with np.load(path, allow_pickle=False) as data:
                magic = str(data["magic"])
                version = int(data["version"])
                if magic != CACHE_MAGIC or version != CACHE_VERSION:
                    msg = f"{path}: foreign cache entry ({magic!r}, v{version})"
                    raise ReferenceCacheError(msg)
                return SpectralState(
                    q=data["q"].copy(),
                    p=data["p"].copy(),
                    t=float(data["t"]),
                )
        except (KeyError, ValueError, zipfile.BadZipFile) as exc:
            msg = f"{path}: unreadable cache entry"
            raise ReferenceCacheError(msg) from exc

    def store(self, key: str, state: SpectralState) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(key)
        tmp = path.with_name(f"{path.name}.{os.getpid()}.tmp")
        with tmp.open("wb") as fh:
            np.savez(
                fh,
                magic=np.array(CACHE_MAGIC),
                version=np.array(CACHE_VERSION),
                q=state.q,
                p=state.p,
                t=np.array(state.t),
            )
        # concurrent writers of one key produce identical files
        tmp.replace(path)


def reference_solution(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    T: float,
    h_ref: float,
    cache: ReferenceCache | None = None,
) -> SpectralState:
    """SLR state at T computed with step h_ref, read from ``cache`` when present."""
    key = reference_key(spec, grid, init, T, h_ref) if cache is not None else ""
    if cache is not None:
        try:
            cached = cache.load(key)
        except ReferenceCacheError:
            logger.exception(f"discarding cache entry {key[:12]}")
            cached = None
        if cached is not None:
            logger.info(f"reference cache hit {key[:12]} (h_ref={h_ref:g}, T={T:g})")
            return cached
        logger.info(f"reference cache miss {key[:12]}")

    n = step_count(h_ref, T)
    result = integrate(MethodTag.SLR, spec, grid, init, h_ref, T, observe_every=n)
    if cache is not None:
        cache.store(key, result.final)
    return result.final


def check_reference_refinement(
    spec: ProblemSpec,
    grid: Grid,
    init: SpectralState,
    T: float,
    h_ref: float,
    smallest_err: float,
    cache: ReferenceCache | None = None,
) -> bool:
    """Does halving h_ref move the reference by less than 10% of ``smallest_err``?"""
    coarse = reference_solution(spec, grid, init, T, h_ref, cache)
    fine = reference_solution(spec, grid, init, T, h_ref / 2.0, cache)
    change = relative_err(coarse, fine, grid)
    passed = change <= REFINEMENT_TOLERANCE * smallest_err
    if not passed:
        logger.warning(
            f"reference not converged: halving h_ref={h_ref:g} changes it by "
            f"{change:.3e}, smallest sweep error is {smallest_err:.3e}",
        )
    return passed
