from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from kglr import settings

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path


@pytest.fixture(autouse=True)
def no_reference_cache(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep KGLR_CACHE_DIR from leaking into the tests."""

    monkeypatch.setattr(settings, "CACHE_DIR", None)


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[[str], Path]:
    """Write a config body to a file under tmp_path and return its path."""

    def writer(body: str, name: str = "experiment.cfg") -> Path:
        path = tmp_path / name
        path.write_text(body, encoding="utf-8")
        return path

    return writer
