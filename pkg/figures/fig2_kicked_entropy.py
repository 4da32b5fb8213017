#!/usr/bin/env python3
"""Entropy growth of the system rotor under the one-kick CPTP map."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from figplot import FigureSpec, render

HERE = Path(__file__).resolve().parent


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default=str(HERE / "data" / "fig2_kicked_map.csv"))
    parser.add_argument("--out", default=str(HERE / "out" / "fig2_kicked_entropy.png"))
    args = parser.parse_args(argv)
    path = render(
        FigureSpec(
            csv_path=args.data,
            x="time",
            y="S",
            xlabel="time (kick periods)",
            ylabel="von Neumann entropy S (nats)",
            out_path=args.out,
            title="Kicked rotor under the stationary-bath map, g = 0.1414",
        )
    )
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
