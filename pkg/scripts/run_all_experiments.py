#!/usr/bin/env python3
"""Run every experiment config under experiments/ through the CLI.

Regenerates the committed figure data under figures/data/ plus the auxiliary
tables under out/. Each config carries its own experiment name.
"""

import json
import pathlib
import sys
import time

from rotor_open_qs.cli import main as cli_main

ROOT = pathlib.Path(__file__).resolve().parent.parent


def run() -> int:
    failures = 0
    for path in sorted((ROOT / "experiments").glob("*.json")):
        with open(path, encoding="utf-8") as fh:
            experiment = json.load(fh)["experiment"]
        start = time.perf_counter()
        code = cli_main([experiment, "--config", str(path)])
        elapsed = time.perf_counter() - start
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{path.name:32s} {experiment:20s} {status:8s} {elapsed:6.1f}s")
        failures += code != 0
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run())
