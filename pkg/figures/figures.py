#!/usr/bin/env python3
"""Render a coefficient-sweep CSV into the standard R/T plot.

Consumes the CSV files produced by ``kgbarrier figures-data`` (or any
file with the same ``swept_value,R,T,unitarity_residual,engine``
layout) and draws the transmission coefficient as a dashed line and
the reflection coefficient as a solid line against the barrier height.
Output is a raster image at a fixed 150 dpi; no window is ever opened,
and re-running on the same CSV overwrites the image with identical
bytes.

Usage:
    figures.py --csv PATH --out PATH [--title STR]

Exits nonzero with a message on a missing, malformed or data-free CSV.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_HEADER = "swept_value,R,T,unitarity_residual,engine"


def read_sweep(path: Path) -> tuple[list[float], list[float], list[float]]:
    """Parse (swept values, R, T) from a sweep CSV, skipping comments."""
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ValueError(str(exc)) from None
    if not lines or lines[0] != EXPECTED_HEADER:
        raise ValueError(f"{path}: expected header {EXPECTED_HEADER!r}")
    values: list[float] = []
    reflection: list[float] = []
    transmission: list[float] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise ValueError(f"{path}:{lineno}: expected 5 columns, got {len(fields)}")
        try:
            values.append(float(fields[0]))
            reflection.append(float(fields[1]))
            transmission.append(float(fields[2]))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-numeric field in {line!r}") from None
    if not values:
        raise ValueError(f"{path}: no data rows")
    return values, reflection, transmission


def render(csv_path: Path, out_path: Path, title: str) -> None:
    values, reflection, transmission = read_sweep(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(values, transmission, "k--", linewidth=1.2, label="T")
    ax.plot(values, reflection, "k-", linewidth=1.2, label="R")
    ax.set_xlabel("$V_0$")
    ax.set_ylabel("coefficient")
    ax.set_ylim(0.0, 1.05)
    ax.set_xlim(values[0], values[-1])
    if title:
        ax.set_title(title)
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True, help="input sweep CSV")
    parser.add_argument("--out", required=True, help="output raster image path")
    parser.add_argument("--title", default="", help="plot title")
    args = parser.parse_args(argv)
    try:
        render(Path(args.csv), Path(args.out), args.title)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
