#!/usr/bin/env python3
"""Entanglement entropy of the two-rotor ground state vs coupling strength."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from figplot import FigureSpec, render

HERE = Path(__file__).resolve().parent


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default=str(HERE / "data" / "fig1_entropy_sweep.csv"))
    parser.add_argument("--out", default=str(HERE / "out" / "fig1_entropy_vs_coupling.png"))
    args = parser.parse_args(argv)
    path = render(
        FigureSpec(
            csv_path=args.data,
            x="g",
            y="S",
            xlabel="coupling strength g",
            ylabel="entanglement entropy S (nats)",
            out_path=args.out,
            title="Two-rotor ground state",
            anchor=(1.0, 0.38, 0.01),
        )
    )
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
