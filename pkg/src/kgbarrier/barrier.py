"""Flat-top barrier with exponential edges: model, kinematics, index map.

The potential is

    V(x) = V0 * exp((x - x0)/a)   for x <  x0,
           V0                     for x0 <= x <= 0,
           V0 * exp(-x/a)         for x >  0,

with height V0 >= 0, left edge x0 <= 0 and smoothness length a > 0.
Natural units hbar = c = m = 1 throughout, so energies are in units of
the rest energy and E > 1 is a propagating state.  As a -> 0 the shape
tends to the square barrier of width |x0|; x0 = 0 collapses the flat
top and leaves the cusp-shaped barrier.

Exterior and interior wavenumbers:

    k = sqrt(E**2 - 1)                (real, > 0)
    q = sqrt((E - V0)**2 - 1)         (branch fixed below)

The branch of q is pinned to {Re q > 0} union {positive imaginary
axis}: propagating interiors get a positive real q, evanescent ones a
positive imaginary q, and nothing ever lands in another quadrant.  The
crossover |E - V0| = 1 makes the interior plane-wave basis collapse and
is refused instead of patched over; sweep drivers step across it.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateError, DomainError
from .specfun import WhittakerIndex

Q_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ScatterParams:
    """Physical scattering inputs in natural units.

    E : particle energy (units of m c**2), must exceed 1
    V0 : barrier height, >= 0
    a : smoothness length, > 0
    x0 : left edge of the flat top, <= 0 (width of the top is |x0|)
    """

    E: float
    V0: float
    a: float
    x0: float

    def __post_init__(self) -> None:
        for name in ("E", "V0", "a", "x0"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if self.E <= 1.0:
            raise DomainError(f"E must exceed 1 (propagating state), got {self.E!r}")
        if self.V0 < 0.0:
            raise DomainError(f"V0 must be non-negative, got {self.V0!r}")
        if self.a <= 0.0:
            raise DomainError(f"a must be positive, got {self.a!r}")
        if self.x0 > 0.0:
            raise DomainError(f"x0 must be <= 0, got {self.x0!r}")


@dataclass(frozen=True)
class Kinematics:
    """Exterior wavenumber k and branch-fixed interior wavenumber q."""

    k: float
    q: complex


def potential_value(x: float, p: ScatterParams) -> float:
    """Barrier height at position x; continuous at both joints."""
    if x < p.x0:
        return p.V0 * math.exp((x - p.x0) / p.a)
    if x <= 0.0:
        return p.V0
    return p.V0 * math.exp(-x / p.a)


def kinematics(p: ScatterParams) -> Kinematics:
    """Wavenumbers for the exterior and the flat top.

    Raises DegenerateError when (E - V0)**2 - 1 vanishes to within
    ``Q_DEGENERATE_TOL``: there q ~ 0 and the interior exponential
    basis degenerates.
    """
    k = math.sqrt(p.E**2 - 1.0)
    d = (p.E - p.V0) ** 2 - 1.0
    if abs(d) < Q_DEGENERATE_TOL:
        raise DegenerateError(
            f"interior wavenumber degenerates: |(E-V0)^2 - 1| = {abs(d):.3e} "
            f"at E={p.E!r}, V0={p.V0!r}"
        )
    if d > 0.0:
        q: complex = complex(math.sqrt(d), 0.0)
    else:
        q = complex(0.0, math.sqrt(-d))
    return Kinematics(k=k, q=q)


def whittaker_index(p: ScatterParams) -> WhittakerIndex:
    """Index pair kappa = i a E, mu = i a sqrt(E**2 - 1)."""
    k = math.sqrt(p.E**2 - 1.0)
    return WhittakerIndex(kappa=complex(0.0, p.a * p.E), mu=complex(0.0, p.a * k))
