"""Render the experiment CSVs into the three summary figures.

Reads the CSV dialect the CLI writes (one '#' metadata line, header row,
plain columns) and produces PNG files. Rendering never touches the input
data, and re-rendering the same CSV reproduces the same image bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


class FigureDataError(ValueError):
    """Missing column or unusable CSV input."""


@dataclass(frozen=True)
class FigureSpec:
    csv_path: str
    x: str
    y: str
    xlabel: str
    ylabel: str
    out_path: str
    title: str = ""
    guide_y: float | None = None
    guide_label: str = ""
    anchor: tuple[float, float, float] | None = None  # (x, y, half-band) marker


def load_table(csv_path: str) -> tuple[dict, dict[str, np.ndarray]]:
    """Parse one CLI CSV: metadata dict plus named float columns."""
    lines = Path(csv_path).read_text(encoding="utf-8").splitlines()
    meta: dict = {}
    if lines and lines[0].startswith("#"):
        for item in lines[0].lstrip("# ").split():
            if "=" in item:
                key, _, value = item.partition("=")
                try:
                    meta[key] = float(value)
                except ValueError:
                    meta[key] = value
        lines = lines[1:]
    if not lines:
        raise FigureDataError(f"{csv_path}: no header row")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:] if line]
    if not rows:
        raise FigureDataError(f"{csv_path}: no data rows")
    table = np.array(rows, dtype=float)
    return meta, {name: table[:, i] for i, name in enumerate(header)}


def render(spec: FigureSpec) -> str:
    """Draw one x/y curve per the spec and write the PNG; returns its path."""
    _, columns = load_table(spec.csv_path)
    for name in (spec.x, spec.y):
        if name not in columns:
            raise FigureDataError(
                f"column {name!r} not in {spec.csv_path} (has {sorted(columns)})"
            )
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(columns[spec.x], columns[spec.y], lw=1.5)
    if spec.guide_y is not None:
        ax.axhline(spec.guide_y, color="gray", ls="--", lw=1.0)
        if spec.guide_label:
            ax.annotate(
                spec.guide_label, (0.02, spec.guide_y), xycoords=("axes fraction", "data"),
                va="bottom", fontsize=9, color="gray",
            )
    if spec.anchor is not None:
        x0, y0, band = spec.anchor
        ax.errorbar([x0], [y0], yerr=[band], fmt="o", ms=4, capsize=3, color="crimson")
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return str(out)
