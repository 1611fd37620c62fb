#!/usr/bin/env python3
"""Regenerate fixtures/oracle_reference.csv.

Each golden row is produced by the ODE oracle at step 1e-5 and is only
frozen after a step-halving convergence check comes in below 1e-8.
Slow by design; run rarely.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kgbarrier import OracleConfig, ScatterParams, convergence_check, integrate_rt, potential_value
from kgbarrier.oracle import save_fixtures

GOLDEN_STEP = 1e-5
GOLDEN_POINTS = (
    ScatterParams(E=2.0, V0=4.0, a=0.5, x0=-1.0),
    ScatterParams(E=2.0, V0=2.0, a=0.5, x0=-2.0),
    ScatterParams(E=3.0, V0=5.0, a=0.1, x0=-1.5),
)


def main() -> None:
    out = pathlib.Path(__file__).resolve().parents[1] / "fixtures" / "oracle_reference.csv"
    records = []
    for p in GOLDEN_POINTS:
        cfg = OracleConfig.for_barrier(p, step=GOLDEN_STEP)
        V = lambda x, p=p: potential_value(x, p)
        gap = convergence_check(V, p.E, cfg)
        if gap >= 1e-8:
            raise SystemExit(f"refusing to freeze {p}: |R(h) - R(h/2)| = {gap:.3e}")
        coeff = integrate_rt(V, p.E, cfg)
        print(f"{p}: R={coeff.R:.12f} T={coeff.T:.12f} halving gap={gap:.3e}")
        records.append((p, coeff, GOLDEN_STEP))
    save_fixtures(out, records)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
