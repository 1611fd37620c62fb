"""Kummer and Whittaker-M functions of complex argument, with derivatives.

This is the numerical core of the scattering solutions: every region
wavefunction reduces to M_kappa,mu evaluated on the positive imaginary
axis.  Evaluation is by the plain power series

    M(a, b, z) = sum_n (a)_n z^n / ((b)_n n!),

truncated when the running term drops below a relative tolerance.  The
argument is capped at ``Z_MAX`` because the physics keeps |z| = 2*a*V0
small; nothing here implements the asymptotic regime, and out-of-range
inputs fail loudly instead of degrading silently.

Conventions
-----------
* Whittaker representation:
      M_kappa,mu(z) = exp(-z/2) * z**(1/2 + mu) * M(1/2 + mu - kappa, 1 + 2*mu, z)
* Fractional powers use the principal branch, argument in (-pi, pi].
  Points on the negative real axis are rejected unless the caller opts
  in, in which case the argument is taken as +pi.
* The companion W function is not provided; the scattering solutions
  never use it.

All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import BranchError, ConvergenceError, DomainError

TOL_SERIES = 1e-15
MAX_TERMS = 500
Z_MAX = 50.0

_NONPOS_INT_TOL = 1e-12

# Above this |z| the partial sums cancel hard enough (max term ~ e^|z|)
# that plain doubles drop below the unitarity tolerances downstream, so
# the summation runs in extended precision.  On x86 longdouble carries
# 64 mantissa bits, about 3.7 extra digits; on platforms where
# longdouble is plain double this is a silent no-op and the series is
# correspondingly less accurate at large |z|.
_EXTENDED_Z_THRESHOLD = 6.0


@dataclass(frozen=True)
class WhittakerIndex:
    """Index pair (kappa, mu) shared by all region solutions.

    For scattering input (energy E > 1, smoothness a) both entries are
    purely imaginary: kappa = i*a*E and mu = i*a*sqrt(E**2 - 1).
    """

    kappa: complex
    mu: complex

    def __post_init__(self) -> None:
        _require_finite("kappa", self.kappa)
        _require_finite("mu", self.mu)


def _require_finite(name: str, value: complex) -> None:
    if not (cmath.isfinite(complex(value))):
        raise DomainError(f"{name} must be finite, got {value!r}")


def _near_nonpositive_integer(b: complex) -> bool:
    if abs(b.imag) > _NONPOS_INT_TOL:
        return False
    n = round(b.real)
    return n <= 0 and abs(b.real - n) <= _NONPOS_INT_TOL


def _principal_power(z: complex, w: complex, *, allow_negative_real: bool) -> complex:
    """z**w with argument in (-pi, pi]; the cut itself needs opting in."""
    if z == 0:
        raise DomainError("0**w is undefined for the exponents used here")
    if z.imag == 0.0 and z.real < 0.0:
        if not allow_negative_real:
            raise BranchError(
                "z lies on the negative real axis; pass allow_negative_real=True "
                "to evaluate with arg(z) = +pi"
            )
        log_z = complex(cmath.log(-z.real), cmath.pi)
    else:
        log_z = cmath.log(z)
    return cmath.exp(w * log_z)


def kummer_m(
    a: complex,
    b: complex,
    z: complex,
    *,
    tol: float = TOL_SERIES,
    max_terms: int = MAX_TERMS,
    z_max: float = Z_MAX,
) -> complex:
    """Confluent hypergeometric 1F1(a; b; z) by truncated power series.

    Parameters
    ----------
    a, b, z : complex
        Series parameters and argument.  ``b`` must not sit within
        1e-12 of a non-positive integer, and |z| must not exceed
        ``z_max``.
    tol : float
        Relative tolerance on the running term; summation stops after
        two consecutive terms below ``tol * |partial sum|``.
    max_terms : int
        Hard cap on the number of terms.

    Raises
    ------
    DomainError
        Non-finite input, ``b`` at a pole, or |z| > z_max.
    ConvergenceError
        Tolerance not met within ``max_terms`` terms.
    """
    a = complex(a)
    b = complex(b)
    z = complex(z)
    _require_finite("a", a)
    _require_finite("b", b)
    _require_finite("z", z)
    if _near_nonpositive_integer(b):
        raise DomainError(f"b={b!r} is within {_NONPOS_INT_TOL} of a non-positive integer")
    if abs(z) > z_max:
        raise DomainError(f"|z|={abs(z):.3g} exceeds the series cap z_max={z_max:.3g}")

    if abs(z) > _EXTENDED_Z_THRESHOLD:
        one = np.clongdouble(1.0)
        total_x = one
        term_x = one
        a_x, b_x, z_x = np.clongdouble(a), np.clongdouble(b), np.clongdouble(z)
        small_streak = 0
        for n in range(max_terms):
            term_x = term_x * (a_x + n) * z_x / ((b_x + n) * (n + 1))
            total_x = total_x + term_x
            if abs(term_x) <= tol * abs(total_x):
                small_streak += 1
                if small_streak >= 2:
                    return complex(total_x)
            else:
                small_streak = 0
    else:
        total = 1.0 + 0.0j
        term = 1.0 + 0.0j
        small_streak = 0
        for n in range(max_terms):
            term *= (a + n) * z / ((b + n) * (n + 1))
            total += term
            if abs(term) <= tol * abs(total):
                small_streak += 1
                if small_streak >= 2:
                    return total
            else:
                small_streak = 0
    raise ConvergenceError(
        f"Kummer series did not converge to tol={tol:.1e} within {max_terms} terms "
        f"(a={a!r}, b={b!r}, z={z!r})"
    )


def whittaker_m(
    idx: WhittakerIndex,
    z: complex,
    *,
    allow_negative_real: bool = False,
    tol: float = TOL_SERIES,
    max_terms: int = MAX_TERMS,
) -> complex:
    """Whittaker M_kappa,mu(z) via the Kummer representation."""
    value, _ = _whittaker_pair(
        idx,
        z,
        allow_negative_real=allow_negative_real,
        tol=tol,
        max_terms=max_terms,
        want_deriv=False,
    )
    return value


def whittaker_m_deriv(
    idx: WhittakerIndex,
    z: complex,
    *,
    allow_negative_real: bool = False,
    tol: float = TOL_SERIES,
    max_terms: int = MAX_TERMS,
) -> complex:
    """d/dz of M_kappa,mu(z), by the product rule on the representation.

    Uses d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z); no finite
    differences are involved.
    """
    _, deriv = _whittaker_pair(
        idx,
        z,
        allow_negative_real=allow_negative_real,
        tol=tol,
        max_terms=max_terms,
        want_deriv=True,
    )
    return deriv


def _whittaker_pair(
    idx: WhittakerIndex,
    z: complex,
    *,
    allow_negative_real: bool = False,
    tol: float = TOL_SERIES,
    max_terms: int = MAX_TERMS,
    want_deriv: bool = True,
) -> tuple[complex, complex]:
    """Value and derivative of M_kappa,mu at z, sharing the prefactor.

    The matcher calls this to avoid evaluating exp(-z/2) z**(1/2+mu)
    twice per boundary point.
    """
    z = complex(z)
    _require_finite("z", z)
    if z == 0:
        raise DomainError("z must be nonzero (fractional power at the origin)")
    alpha = 0.5 + idx.mu - idx.kappa
    beta = 1.0 + 2.0 * idx.mu
    prefactor = cmath.exp(-z / 2) * _principal_power(
        z, 0.5 + idx.mu, allow_negative_real=allow_negative_real
    )
    m0 = kummer_m(alpha, beta, z, tol=tol, max_terms=max_terms)
    value = prefactor * m0
    if not want_deriv:
        return value, 0.0j
    m1 = kummer_m(alpha + 1.0, beta + 1.0, z, tol=tol, max_terms=max_terms)
    deriv = prefactor * ((-0.5 + (0.5 + idx.mu) / z) * m0 + (alpha / beta) * m1)
    return value, deriv
