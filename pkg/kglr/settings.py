"""
Runtime settings for kglr.

Values come from the process environment, optionally seeded from a ``.env``
file at the repository root. Experiment parameters do not live here; they
are read from the experiment config files (see ``kglr.cli.config``).
"""

from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Initialize environment variables
env = environ.Env(
    # Set casting and default values
    KGLR_LOG_LEVEL=(str, "INFO"),
    KGLR_JOBS=(int, 1),
    KGLR_CACHE_DIR=(str, ""),
)

# Read .env file
environ.Env.read_env(BASE_DIR / ".env")

LOG_LEVEL = env("KGLR_LOG_LEVEL").upper()

# Default sweep parallelism, overridden by --jobs
JOBS = max(1, env("KGLR_JOBS"))

# Reference-solution cache; empty disables caching
CACHE_DIR: Path | None = (
    Path(env("KGLR_CACHE_DIR")).expanduser() if env("KGLR_CACHE_DIR") else None
)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
