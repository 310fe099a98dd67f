#!/usr/bin/env python3
"""Replay the full classification and write the audit record.

Sweeps every catalog entry at every stored parameter point, re-verifying
witnesses and re-certifying obstructions from scratch, then prints one
line per instantiation and a mismatch summary.  With ``--out`` the full
JSON record (one report per point, certificates included) is written to
a file for archival or diffing.

Usage:
    python scripts/run_classification.py [--exact] [--trials N]
        [--seed N] [--samples N] [--catalog PATH] [--out FILE]
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from stableforms.catalog import ClassifyConfig, classify_all, load_catalog
from stableforms.cli import SCHEMA_VERSION, render_json
from stableforms.obstructions import (
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--exact", action="store_true",
                        help="fully symbolic certificates (slower)")
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    parser.add_argument("--seed", type=lambda s: int(s, 0),
                        default=DEFAULT_SEED)
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_SIZE)
    parser.add_argument("--catalog", default=None,
                        help="catalog file (default: bundled)")
    parser.add_argument("--out", default=None,
                        help="write the full JSON record here")
    args = parser.parse_args()

    entries = load_catalog(args.catalog)
    config = ClassifyConfig(
        mode="exact" if args.exact else "randomized",
        trials=args.trials, seed=args.seed, sample_size=args.samples)

    start = time.perf_counter()
    sweep = classify_all(entries, config)
    elapsed = time.perf_counter() - start

    for line in sweep.summary_lines():
        print(line)
    print(f"elapsed: {elapsed:.1f}s")

    if args.out:
        record = dict(sweep.as_dict(), schema=SCHEMA_VERSION,
                      command="classify", elapsed_seconds=round(elapsed, 1))
        Path(args.out).write_text(render_json(record) + "\n")
        print(f"wrote {args.out}")

    return 0 if sweep.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
