"""Module entry point: ``python -m stableforms``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
