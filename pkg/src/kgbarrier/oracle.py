"""Brute-force R/T by direct integration of the stationary wave equation.

Ground truth for validating the matched Whittaker solutions: integrate

    phi''(x) = -[(E - V(x))**2 - 1] * phi(x)

for an arbitrary potential callable.  A pure right-moving wave
phi = exp(ikx) is imposed at x_max and the system is integrated
backward to x_min with classical fixed-step RK4 (backward, so only one
asymptotic amplitude ever lives on the right and nothing stiff mixes
in).  Projecting (phi, phi') at x_min onto {exp(ikx), exp(-ikx)} gives
the incident and reflected amplitudes, and with unit transmitted
amplitude

    R = |A_ref / A_inc|**2,   T = 1 / |A_inc|**2.

Fixed steps keep golden files bit-reproducible.  Potentials may have
isolated kinks (or outright jumps, e.g. a square barrier); list those
abscissae in ``breakpoints`` so each smooth piece is integrated on its
own aligned sub-grid, with one-sided sampling at the seams.  That
preserves clean fourth-order convergence.

Golden fixtures produced by this module are CSV files with columns
``E,V0,a,x0,R,T,step`` (see ``save_fixtures``/``load_fixtures``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Iterable

from .barrier import ScatterParams
from .errors import DomainError, StepError
from .matcher import Coefficients

UNITARITY_TOL = 1e-6
FIXTURE_HEADER = "E,V0,a,x0,R,T,step"

# Fraction of a step by which boundary samples are nudged into their
# segment, so jump discontinuities at seams are sampled one-sidedly.
_SEAM_NUDGE = 1e-9


@dataclass(frozen=True)
class OracleConfig:
    """Integration window and step for one oracle run.

    ``breakpoints`` lists abscissae where the potential is not smooth;
    points outside (x_min, x_max) are ignored.  ``tail_tol`` is the
    admissible ratio |V(window edge)| / max|V|; windows whose tails are
    fatter than that are refused because the plane-wave projection
    would silently inherit the bias.
    """

    x_min: float
    x_max: float
    step: float = 1e-4
    tail_tol: float = 1e-10
    breakpoints: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        for name in ("x_min", "x_max", "step", "tail_tol"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not self.x_min < self.x_max:
            raise DomainError(f"need x_min < x_max, got [{self.x_min!r}, {self.x_max!r}]")
        if self.step <= 0.0:
            raise DomainError(f"step must be positive, got {self.step!r}")

    @classmethod
    def for_barrier(
        cls,
        p: ScatterParams,
        *,
        margin: float = 30.0,
        step: float = 1e-4,
        tail_tol: float = 1e-10,
    ) -> "OracleConfig":
        """Window [x0 - margin*a, +margin*a] with seams at the joints.

        The default margin of 30 smoothness lengths leaves a potential
        tail of exp(-30) ~ 9e-14 of V0 at the window edges, below the
        default tail tolerance.
        """
        if math.exp(-margin) > tail_tol:
            raise DomainError(
                f"margin {margin!r} leaves a tail ratio exp(-margin) = "
                f"{math.exp(-margin):.3e} above tail_tol = {tail_tol:.3e}"
            )
        return cls(
            x_min=p.x0 - margin * p.a,
            x_max=margin * p.a,
            step=step,
            tail_tol=tail_tol,
            breakpoints=(p.x0, 0.0),
        )


def _segments(cfg: OracleConfig) -> list[tuple[float, float]]:
    cuts = sorted({b for b in cfg.breakpoints if cfg.x_min < b < cfg.x_max})
    edges = [cfg.x_min, *cuts, cfg.x_max]
    return [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]


def _coefficient_samples(
    V: Callable[[float], float], E: float, lo: float, hi: float, n: int
) -> list[float]:
    """-phi''/phi coefficient at half-step resolution over one segment.

    Returns W(x_j) = (E - V(x_j))**2 - 1 at x_j = lo + j*h/2 for
    j = 0..2n; the two endpoint samples are nudged into the segment so
    a discontinuity sitting exactly on a seam is sampled one-sidedly.
    """
    h = (hi - lo) / n
    nudge = _SEAM_NUDGE * h
    out = []
    for j in range(2 * n + 1):
        x = lo + 0.5 * j * h
        if j == 0:
            x += nudge
        elif j == 2 * n:
            x = hi - nudge
        v = V(x)
        out.append((E - v) * (E - v) - 1.0)
    return out


def integrate_rt(V: Callable[[float], float], E: float, cfg: OracleConfig) -> Coefficients:
    """R and T for the potential ``V`` at energy ``E``, by backward RK4.

    Raises StepError if |R + T - 1| exceeds 1e-6, which signals that the
    step did not resolve the potential.  Raises DomainError when the
    potential has not decayed to ``cfg.tail_tol`` of its peak at the
    window edges.
    """
    if not math.isfinite(E) or E <= 1.0:
        raise DomainError(f"E must be finite and exceed 1, got {E!r}")
    k = math.sqrt(E * E - 1.0)

    v_peak = max(abs(V(x)) for x in _coarse_probe(cfg))
    for edge in (cfg.x_min, cfg.x_max):
        if v_peak > 0.0 and abs(V(edge)) > cfg.tail_tol * v_peak:
            raise DomainError(
                f"potential tail |V({edge!r})| = {abs(V(edge)):.3e} exceeds "
                f"tail_tol * peak = {cfg.tail_tol * v_peak:.3e}; widen the window"
            )

    # (step size, W at half-step resolution) per smooth segment.
    samples: list[tuple[float, int, list[float]]] = []
    for lo, hi in _segments(cfg):
        n = max(1, math.ceil((hi - lo) / cfg.step - 1e-12))
        samples.append(((hi - lo) / n, n, _coefficient_samples(V, E, lo, hi, n)))

    phi = cmath.exp(1j * k * cfg.x_max)
    dphi = 1j * k * phi
    for h, n, w in reversed(samples):
        for j in range(n, 0, -1):
            w_hi = w[2 * j]
            w_mid = w[2 * j - 1]
            w_lo = w[2 * j - 2]
            a1 = dphi
            b1 = -w_hi * phi
            a2 = dphi - 0.5 * h * b1
            b2 = -w_mid * (phi - 0.5 * h * a1)
            a3 = dphi - 0.5 * h * b2
            b3 = -w_mid * (phi - 0.5 * h * a2)
            a4 = dphi - h * b3
            b4 = -w_lo * (phi - h * a3)
            phi = phi - (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
            dphi = dphi - (h / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4)

    ik = 1j * k
    a_inc = 0.5 * (phi + dphi / ik) * cmath.exp(-ik * cfg.x_min)
    a_ref = 0.5 * (phi - dphi / ik) * cmath.exp(ik * cfg.x_min)
    inc2 = abs(a_inc) ** 2
    r = abs(a_ref) ** 2 / inc2
    t = 1.0 / inc2
    residual = r + t - 1.0
    if abs(residual) > UNITARITY_TOL:
        raise StepError(
            f"|R + T - 1| = {abs(residual):.3e} exceeds {UNITARITY_TOL:.0e}; "
            f"step {cfg.step!r} under-resolves the potential"
        )
    return Coefficients(R=r, T=t, unitarity_residual=residual)


def _coarse_probe(cfg: OracleConfig) -> list[float]:
    span = cfg.x_max - cfg.x_min
    pts = [cfg.x_min + span * i / 256.0 for i in range(257)]
    pts.extend(b for b in cfg.breakpoints if cfg.x_min <= b <= cfg.x_max)
    return pts


def convergence_check(V: Callable[[float], float], E: float, cfg: OracleConfig) -> float:
    """|R(step) - R(step/2)|; must sit below 1e-8 before freezing a golden."""
    coarse = integrate_rt(V, E, cfg)
    fine = integrate_rt(V, E, replace(cfg, step=cfg.step / 2.0))
    return abs(coarse.R - fine.R)


def save_fixtures(path: str | Path, records: Iterable[tuple[ScatterParams, Coefficients, float]]) -> None:
    """Write golden rows (params, coefficients, step) as CSV."""
    lines = [FIXTURE_HEADER]
    for p, coeff, step in records:
        lines.append(
            f"{p.E:.17g},{p.V0:.17g},{p.a:.17g},{p.x0:.17g},"
            f"{coeff.R:.17g},{coeff.T:.17g},{step:.17g}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_fixtures(path: str | Path) -> list[tuple[ScatterParams, Coefficients, float]]:
    """Read golden rows written by ``save_fixtures``."""
    text = Path(path).read_text(encoding="utf-8").strip().splitlines()
    if not text or text[0] != FIXTURE_HEADER:
        raise DomainError(f"{path}: missing fixture header {FIXTURE_HEADER!r}")
    out = []
    for line in text[1:]:
        e, v0, a, x0, r, t, step = (float(tok) for tok in line.split(","))
        params = ScatterParams(E=e, V0=v0, a=a, x0=x0)
        out.append((params, Coefficients(R=r, T=t, unitarity_residual=r + t - 1.0), step))
    return out
