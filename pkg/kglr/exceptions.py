from __future__ import annotations

from environ.compat import ImproperlyConfigured


class ConfigError(ImproperlyConfigured):
    """An experiment config could not be parsed or violates an invariant."""

    def __init__(
        self,
        message: str,
        key: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.message = message
        self.key = key
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
        parts = [p for p in (location, f"key '{key}'" if key else "") if p]
        prefix = f"{' '.join(parts)}: " if parts else ""
        super().__init__(f"{prefix}{message}")


class IntegrationAbortedError(FloatingPointError):
    """A trajectory produced a non-finite coefficient."""

    def __init__(self, method: str, step: int, t: float) -> None:
        self.method = method
        self.step = step
        self.t = t
        super().__init__(
            f"{method}: non-finite state at step {step} (t={t:.6g}); run aborted",
        )


class ReferenceCacheError(OSError):
    """A cached reference solution is unreadable or has a foreign format."""
