"""Closed-form square-barrier coefficients for two dispersion relations.

For a square barrier of height V0 on [x0, 0] (width |x0|) the textbook
matching gives

    R = (k1^2 - k2^2)^2 sin^2(k2 x0)
        / [4 k1^2 k2^2 + (k1^2 - k2^2)^2 sin^2(k2 x0)],
    T = 4 k1^2 k2^2 / [same denominator],

with exterior/interior wavenumbers depending on the dispersion:

    schrodinger:  k1 = sqrt(2 E),        k2 = sqrt(2 (E - V0))
    klein_gordon: k1 = sqrt(E^2 - 1),    k2 = sqrt((E - V0)^2 - 1)

When k2^2 < 0 (evanescent interior) the sine of the imaginary argument
is continued through sinh: sin^2 -> -sinh^2 with k2^2 carrying its
sign, which keeps R real in [0, 1] and is the unique real-valued
extension.  The point k2 = 0 itself is refused.

Transmission resonances sit at sin(k2 x0) = 0, i.e. k2 |x0| = n pi; the
relativistic dispersion packs more of them into a given V0 range than
the non-relativistic one.
"""

from __future__ import annotations

import enum
import math

from .errors import DegenerateError, DomainError
from .matcher import Coefficients

K2_DEGENERATE_TOL = 1e-12


class Dispersion(enum.Enum):
    SCHRODINGER = "schrodinger"
    KLEIN_GORDON = "klein_gordon"


def wavenumbers_squared(E: float, V0: float, d: Dispersion) -> tuple[float, float]:
    """(k1^2, k2^2) for the chosen dispersion; validates the E regime."""
    if not (math.isfinite(E) and math.isfinite(V0)):
        raise DomainError("E and V0 must be finite")
    if d is Dispersion.SCHRODINGER:
        if E <= 0.0:
            raise DomainError(f"E must be positive for the Schrodinger dispersion, got {E!r}")
        return 2.0 * E, 2.0 * (E - V0)
    if E <= 1.0:
        raise DomainError(f"E must exceed 1 for the Klein-Gordon dispersion, got {E!r}")
    return E * E - 1.0, (E - V0) ** 2 - 1.0


def square_barrier_rt(E: float, V0: float, x0: float, d: Dispersion) -> Coefficients:
    """Closed-form square-barrier coefficients; raises at k2 = 0."""
    if not math.isfinite(x0) or x0 > 0.0:
        raise DomainError(f"x0 must be finite and <= 0, got {x0!r}")
    k1sq, k2sq = wavenumbers_squared(E, V0, d)
    if abs(k2sq) < K2_DEGENERATE_TOL:
        raise DegenerateError(
            f"k2^2 = {k2sq:.3e} vanishes at E={E!r}, V0={V0!r}; the interior basis collapses"
        )
    if k2sq > 0.0:
        s = math.sin(math.sqrt(k2sq) * x0)
        s2 = s * s
    else:
        s = math.sinh(math.sqrt(-k2sq) * x0)
        s2 = -s * s
    contrast = (k1sq - k2sq) ** 2 * s2
    den = 4.0 * k1sq * k2sq + contrast
    r = contrast / den
    t = 4.0 * k1sq * k2sq / den
    return Coefficients(R=r, T=t, unitarity_residual=r + t - 1.0)
