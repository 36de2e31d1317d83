"""Developer entry point: ``uv run manage.py <verb> ...`` behaves like ``kglr``."""

import sys


def main() -> None:
    """Run a kglr command.

    Raises:
        ImportError: If kglr's dependencies are not installed or the package
            is not available on PYTHONPATH.
    """
    try:
        from kglr.cli.main import main as kglr_main  # noqa: PLC0415
    except ImportError as exc:
        msg = (
            "Couldn't import kglr. Are its dependencies installed and is it "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        )
        raise ImportError(
            msg,
        ) from exc
    sys.exit(kglr_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
