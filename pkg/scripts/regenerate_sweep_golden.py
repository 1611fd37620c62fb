#!/usr/bin/env python3
"""Regenerate fixtures/sweep_smooth_x0_-1.csv, the byte-for-byte golden
for the configs/smooth_x0_-1.conf sweep."""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kgbarrier import emit_csv, read_config, run_scan


def main() -> None:
    root = pathlib.Path(__file__).resolve().parents[1]
    spec = read_config(root / "configs" / "smooth_x0_-1.conf")
    out = root / "fixtures" / "sweep_smooth_x0_-1.csv"
    emit_csv(run_scan(spec), out)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
