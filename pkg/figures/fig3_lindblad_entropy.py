#!/usr/bin/env python3
"""Entropy under the kicked GKSL flow, saturating at the maximally mixed state."""

import argparse
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))
from figplot import FigureSpec, load_table, render

HERE = Path(__file__).resolve().parent


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default=str(HERE / "data" / "fig3_lindblad_kicked.csv"))
    parser.add_argument("--out", default=str(HERE / "out" / "fig3_lindblad_entropy.png"))
    args = parser.parse_args(argv)
    meta, _ = load_table(args.data)
    dim = 2 * int(meta.get("M", 16)) + 1
    path = render(
        FigureSpec(
            csv_path=args.data,
            x="step_or_t",
            y="S",
            xlabel="number of kicks",
            ylabel="von Neumann entropy S (nats)",
            out_path=args.out,
            title="Kicked GKSL flow, g = 0.1414",
            guide_y=float(np.log(dim)),
            guide_label=f"ln {dim}",
        )
    )
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
