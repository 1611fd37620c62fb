"""Numerical invariant suites behind the ``check`` CLI verb.

Each check returns a CheckResult; all of them together are the
package's acceptance gate.  They are deliberately self-contained (fixed
grids, fixed RNG seeds) so two runs agree bit for bit.
"""

from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .analytic import Dispersion, square_barrier_rt
from .barrier import ScatterParams, potential_value
from .errors import DegenerateError
from .matcher import coefficients
from .oracle import OracleConfig, integrate_rt
from .scan import ScanSpec, find_resonances, run_scan
from .specfun import WhittakerIndex, kummer_m, whittaker_m, whittaker_m_deriv

UNITARITY_GRID_TOL = 1e-8
UNITARITY_GRID_BUDGET_S = 120.0
EQUIVALENCE_TOL = 1e-6
EQUIVALENCE_BUDGET_S = 60.0
SQUARE_LIMIT_TOL = 1e-3
RESONANCE_POSITION_TOL = 1e-3

# sin(k2 |x0|) = 0 with n = 1 at E = 3, |x0| = 3.
KG_RESONANCE_V0 = 3.0 - math.sqrt(1.0 + math.pi**2 / 9.0)
SCHRODINGER_RESONANCE_V0 = 3.0 - math.pi**2 / 18.0

UNITARITY_ENERGIES = (1.5, 2.0, 3.0, 5.0)
UNITARITY_SMOOTHNESS = (1e-3, 0.1, 0.5, 1.0)
UNITARITY_EDGES = (-3.0, -2.0, -1.0, 0.0)

EQUIVALENCE_SEED = 20260810
EQUIVALENCE_POINTS = 50


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name=name, passed=passed, detail=detail, seconds=time.perf_counter() - start)


def check_unitarity_grid() -> CheckResult:
    """|R+T-1| <= 1e-8 and R, T in [0, 1] over the full parameter grid."""

    def body() -> tuple[bool, str]:
        worst = 0.0
        bounds_ok = True
        evaluated = 0
        skipped = 0
        started = time.perf_counter()
        v0_grid = [i * 0.05 for i in range(201)]
        for e in UNITARITY_ENERGIES:
            for a in UNITARITY_SMOOTHNESS:
                for x0 in UNITARITY_EDGES:
                    for v0 in v0_grid:
                        try:
                            coeff = coefficients(ScatterParams(E=e, V0=v0, a=a, x0=x0))
                        except DegenerateError:
                            skipped += 1
                            continue
                        evaluated += 1
                        worst = max(worst, abs(coeff.unitarity_residual))
                        if not (-1e-8 <= coeff.R <= 1.0 + 1e-8 and -1e-8 <= coeff.T <= 1.0 + 1e-8):
                            bounds_ok = False
        elapsed = time.perf_counter() - started
        ok = worst <= UNITARITY_GRID_TOL and bounds_ok and elapsed <= UNITARITY_GRID_BUDGET_S
        return ok, (
            f"max|R+T-1|={worst:.3e} over {evaluated} points "
            f"({skipped} degenerate skipped, {elapsed:.1f}s, bounds_ok={bounds_ok})"
        )

    return _timed("unitarity-grid", body)


def random_valid_params(rng: random.Random) -> ScatterParams:
    """Scattering parameters away from the q ~ 0 crossover."""
    while True:
        e = rng.uniform(1.3, 4.5)
        v0 = rng.uniform(0.0, 8.0)
        if abs(abs(e - v0) - 1.0) < 0.05:
            continue
        return ScatterParams(E=e, V0=v0, a=rng.uniform(0.1, 1.0), x0=rng.uniform(-3.0, 0.0))


def check_oracle_equivalence() -> CheckResult:
    """Matcher R agrees with the ODE oracle to 1e-6 on random inputs."""

    def body() -> tuple[bool, str]:
        rng = random.Random(EQUIVALENCE_SEED)
        worst = 0.0
        started = time.perf_counter()
        for _ in range(EQUIVALENCE_POINTS):
            p = random_valid_params(rng)
            matched = coefficients(p)
            cfg = OracleConfig.for_barrier(p, step=5e-4)
            probed = integrate_rt(lambda x: potential_value(x, p), p.E, cfg)
            worst = max(worst, abs(matched.R - probed.R))
        elapsed = time.perf_counter() - started
        ok = worst <= EQUIVALENCE_TOL and elapsed <= EQUIVALENCE_BUDGET_S
        return ok, f"max|dR|={worst:.3e} over {EQUIVALENCE_POINTS} random points ({elapsed:.1f}s)"

    return _timed("matcher-oracle-equivalence", body)


def check_square_barrier_limit() -> CheckResult:
    """At a = 1e-3 the matcher lands on the square-barrier closed form."""

    def body() -> tuple[bool, str]:
        worst = 0.0
        compared = 0
        for i in range(121):
            v0 = i * 0.05
            try:
                matched = coefficients(ScatterParams(E=3.0, V0=v0, a=1e-3, x0=-3.0))
                exact = square_barrier_rt(3.0, v0, -3.0, Dispersion.KLEIN_GORDON)
            except DegenerateError:
                continue
            compared += 1
            worst = max(worst, abs(matched.R - exact.R))
        return worst <= SQUARE_LIMIT_TOL, f"max|dR|={worst:.3e} over {compared} points (V0 in [0,6])"

    return _timed("square-barrier-limit", body)


def _analytic_resonances(engine: str) -> list[tuple[float, float]]:
    spec = ScanSpec(
        sweep_variable="V0",
        start=0.0,
        stop=6.0,
        step=0.01,
        fixed={"E": 3.0, "a": 1e-3, "x0": -3.0},
        engine=engine,
    )
    return find_resonances(run_scan(spec).rows)


def check_resonance_positions() -> CheckResult:
    """The n = 1 sine-root resonance sits where the closed form says."""

    def body() -> tuple[bool, str]:
        kg = _analytic_resonances("analytic_kg")
        schrodinger = _analytic_resonances("analytic_schrodinger")
        kg_hit = min((abs(v - KG_RESONANCE_V0) for v, _ in kg), default=math.inf)
        sc_hit = min((abs(v - SCHRODINGER_RESONANCE_V0) for v, _ in schrodinger), default=math.inf)
        ok = kg_hit <= RESONANCE_POSITION_TOL and sc_hit <= RESONANCE_POSITION_TOL
        return ok, (
            f"KG peak within {kg_hit:.2e} of {KG_RESONANCE_V0:.5f}, "
            f"Schrodinger within {sc_hit:.2e} of {SCHRODINGER_RESONANCE_V0:.5f}"
        )

    return _timed("resonance-positions", body)


def _smooth_resonance_count(x0: float) -> int:
    spec = ScanSpec(
        sweep_variable="V0",
        start=0.0,
        stop=10.0,
        step=0.01,
        fixed={"E": 2.0, "a": 0.5, "x0": x0},
        engine="matcher",
    )
    return len(find_resonances(run_scan(spec).rows))


def check_resonance_count_vs_width() -> CheckResult:
    """A wider flat top fits at least as many transmission resonances."""

    def body() -> tuple[bool, str]:
        narrow = _smooth_resonance_count(-1.0)
        wide = _smooth_resonance_count(-2.0)
        ok = narrow >= 1 and wide >= 1 and wide >= narrow
        return ok, f"peaks(T>0.999): x0=-1 -> {narrow}, x0=-2 -> {wide}"

    return _timed("resonance-count-vs-width", body)


def check_dispersion_resonance_density() -> CheckResult:
    """Relativistic dispersion packs strictly more resonances in V0 in [0,6]."""

    def body() -> tuple[bool, str]:
        kg = len(_analytic_resonances("analytic_kg"))
        schrodinger = len(_analytic_resonances("analytic_schrodinger"))
        return kg > schrodinger, f"KG peaks {kg} vs Schrodinger peaks {schrodinger}"

    return _timed("dispersion-resonance-density", body)


def check_specfun_identities() -> CheckResult:
    """Closed forms, the Kummer transformation and the defining ODE."""

    def body() -> tuple[bool, str]:
        failures = []

        if abs(kummer_m(1.0, 2.0, 1.0) - (math.e - 1.0)) > 1e-12:
            failures.append("M(1,2,1) != e-1")
        half = WhittakerIndex(kappa=0.0, mu=0.5)
        if abs(whittaker_m(half, 2.0) - 2.0 * math.sinh(1.0)) > 1e-12:
            failures.append("M_{0,1/2}(2) != 2 sinh 1")
        if abs(whittaker_m_deriv(half, 2.0) - math.cosh(1.0)) > 1e-12:
            failures.append("M'_{0,1/2}(2) != cosh 1")

        rng = random.Random(7)
        for _ in range(25):
            a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            b = complex(rng.uniform(0.5, 3), rng.uniform(-2, 2))
            z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            lhs = kummer_m(a, b, z)
            rhs = cmath.exp(z) * kummer_m(b - a, b, -z)
            if abs(lhs - rhs) > 1e-10 * abs(lhs):
                failures.append(f"Kummer transform off at a={a}, b={b}, z={z}")
                break

        for _ in range(20):
            e = rng.uniform(1.2, 4.0)
            a_len = rng.uniform(0.1, 1.0)
            idx = WhittakerIndex(
                kappa=complex(0, a_len * e), mu=complex(0, a_len * math.sqrt(e * e - 1.0))
            )
            z = cmath.rect(rng.uniform(0.5, 8.0), rng.uniform(-2.6, 2.6))
            h = 1e-6 * max(1.0, abs(z))
            second = (whittaker_m_deriv(idx, z + h) - whittaker_m_deriv(idx, z - h)) / (2.0 * h)
            value = whittaker_m(idx, z)
            residual = second + (-0.25 + idx.kappa / z + (0.25 - idx.mu**2) / z**2) * value
            if abs(residual) > 1e-6:
                failures.append(f"Whittaker ODE residual {abs(residual):.2e} at z={z}")
                break

        for _ in range(20):
            e = rng.uniform(1.2, 4.0)
            a_len = rng.uniform(0.1, 1.0)
            idx = WhittakerIndex(
                kappa=complex(0, a_len * e), mu=complex(0, a_len * math.sqrt(e * e - 1.0))
            )
            z = cmath.rect(rng.uniform(0.5, 8.0), rng.uniform(-2.6, 2.6))
            h = 1e-6 * max(1.0, abs(z))
            fd = (whittaker_m(idx, z + h) - whittaker_m(idx, z - h)) / (2.0 * h)
            an = whittaker_m_deriv(idx, z)
            if abs(fd - an) > 1e-6 * abs(an):
                failures.append(f"derivative vs finite difference off at z={z}")
                break

        return not failures, "; ".join(failures) if failures else "closed forms, transform, ODE, derivative all hold"

    return _timed("special-function-identities", body)


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_specfun_identities,
    check_square_barrier_limit,
    check_resonance_positions,
    check_dispersion_resonance_density,
    check_resonance_count_vs_width,
    check_unitarity_grid,
    check_oracle_equivalence,
)


def run_all_checks() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
