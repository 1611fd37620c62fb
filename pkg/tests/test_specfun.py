"""Kummer/Whittaker series against closed forms, a frozen high-precision
oracle, identities, and the defining differential equation."""

import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import random_whittaker_index
from kgbarrier import (
    BranchError,
    ConvergenceError,
    DomainError,
    WhittakerIndex,
    kummer_m,
    whittaker_m,
    whittaker_m_deriv,
)

# Frozen from tests/hp_oracle.py (term-by-term summation at 50 digits,
# 200 terms; cross-checked against mpmath's own implementations to 4e-51).
KUMMER_GENERIC = complex(0.37066215107767353, 0.6933280346636165)
WHITTAKER_GENERIC = complex(0.585518928352288, 0.6177156872726974)
WHITTAKER_GENERIC_IDX = WhittakerIndex(kappa=1j, mu=0.5 * math.sqrt(3.0) * 1j)


class TestKummer:
    def test_at_zero_is_one(self):
        assert kummer_m(0.5 + 0.3j, 1.0 + 0.6j, 0.0) == 1.0 + 0.0j
        assert kummer_m(-2.0, 3.5, 0.0) == 1.0 + 0.0j

    def test_closed_form_m_1_2_1(self):
        assert kummer_m(1.0, 2.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-13)

    def test_generic_complex_triple_vs_frozen_oracle(self):
        value = kummer_m(0.5 + 0.3j, 1.0 + 0.6j, 2.0j)
        assert abs(value - KUMMER_GENERIC) <= 1e-13 * abs(KUMMER_GENERIC)

    def test_b_near_nonpositive_integer_rejected(self):
        with pytest.raises(DomainError):
            kummer_m(1.0, 0.0, 1.0)
        with pytest.raises(DomainError):
            kummer_m(1.0, -3.0 + 5e-13j, 1.0)
        # Nearby but admissible values are fine.
        kummer_m(1.0, -3.0 + 1e-3j, 1.0)

    def test_argument_cap(self):
        with pytest.raises(DomainError):
            kummer_m(1.0, 2.0, 51.0)
        kummer_m(1.0, 2.0, 49.0, z_max=50.0)

    def test_convergence_error_when_starved_of_terms(self):
        with pytest.raises(ConvergenceError):
            kummer_m(1.0, 2.0, 20.0j, max_terms=10)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            kummer_m(complex(math.nan, 0), 2.0, 1.0)
        with pytest.raises(DomainError):
            kummer_m(1.0, 2.0, complex(math.inf, 0))


# Strategy: parameters of moderate size, b safely away from the poles.
_params = st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False)
_b_values = st.builds(
    complex,
    st.floats(min_value=0.3, max_value=4.0),
    st.floats(min_value=-3.0, max_value=3.0),
)
_arguments = st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)


class TestKummerProperties:
    @given(a=_params, b=_b_values, z=_arguments)
    def test_kummer_transformation(self, a, b, z):
        lhs = kummer_m(a, b, z)
        rhs = cmath.exp(z) * kummer_m(b - a, b, -z)
        assume(abs(lhs) > 1e-30)
        assert abs(lhs - rhs) <= 1e-10 * abs(lhs)

    @given(a=_params, z=_arguments)
    def test_m_a_a_z_is_exp(self, a, z):
        assume(abs(a.imag) > 1e-9 or a.real > 0.3)
        value = kummer_m(a, a, z)
        assert abs(value - cmath.exp(z)) <= 1e-12 * abs(cmath.exp(z))

    @given(b=_b_values, z=_arguments)
    def test_m_0_b_z_is_one(self, b, z):
        assert abs(kummer_m(0.0, b, z) - 1.0) <= 1e-12

    @given(a=_params, b=_b_values, z=_arguments)
    def test_conjugation_symmetry(self, a, b, z):
        direct = kummer_m(a.conjugate(), b.conjugate(), z.conjugate())
        mirrored = kummer_m(a, b, z).conjugate()
        scale = max(abs(direct), 1e-30)
        assert abs(direct - mirrored) <= 1e-12 * scale


class TestWhittaker:
    def test_closed_form_sinh(self):
        # M_{0,1/2}(z) = 2 sinh(z/2)
        idx = WhittakerIndex(kappa=0.0, mu=0.5)
        assert whittaker_m(idx, 2.0) == pytest.approx(2.0 * math.sinh(1.0), rel=1e-13)

    def test_closed_form_sinh_derivative(self):
        idx = WhittakerIndex(kappa=0.0, mu=0.5)
        assert whittaker_m_deriv(idx, 2.0) == pytest.approx(math.cosh(1.0), rel=1e-13)

    def test_generic_value_vs_frozen_oracle(self):
        value = whittaker_m(WHITTAKER_GENERIC_IDX, 3.0j)
        assert abs(value - WHITTAKER_GENERIC) <= 1e-13 * abs(WHITTAKER_GENERIC)

    def test_small_z_asymptote(self):
        # M ~ exp(-z/2) z**(1/2+mu) as z -> 0; probe |z| = 1e-6.
        idx = WHITTAKER_GENERIC_IDX
        z = 1e-6j
        ratio = whittaker_m(idx, z) / (cmath.exp(-z / 2) * z ** (0.5 + idx.mu))
        assert abs(ratio - 1.0) < 1e-5

    def test_small_z_derivative_asymptote(self):
        idx = WHITTAKER_GENERIC_IDX
        z = 1e-6j
        lead = cmath.exp(-z / 2) * z ** (idx.mu - 0.5) * (0.5 + idx.mu)
        assert abs(whittaker_m_deriv(idx, z) / lead - 1.0) < 1e-5

    def test_zero_argument_rejected(self):
        with pytest.raises(DomainError):
            whittaker_m(WHITTAKER_GENERIC_IDX, 0.0)

    def test_negative_real_axis_needs_opt_in(self):
        idx = WhittakerIndex(kappa=0.25, mu=0.3)
        with pytest.raises(BranchError):
            whittaker_m(idx, -2.0)
        value = whittaker_m(idx, -2.0, allow_negative_real=True)
        assert cmath.isfinite(value)

    def test_derivative_matches_finite_difference(self, rng):
        # 20 random admissible (index, z) pairs, relative 1e-6.
        for _ in range(20):
            idx = random_whittaker_index(rng)
            z = cmath.rect(rng.uniform(0.5, 8.0), rng.uniform(-2.6, 2.6))
            h = 1e-6 * max(1.0, abs(z))
            fd = (whittaker_m(idx, z + h) - whittaker_m(idx, z - h)) / (2.0 * h)
            analytic = whittaker_m_deriv(idx, z)
            assert abs(fd - analytic) <= 1e-6 * abs(analytic)

    def test_satisfies_whittaker_ode(self, rng):
        # f'' + [-1/4 + kappa/z + (1/4 - mu^2)/z^2] f = 0, with f''
        # taken by central difference of the analytic first derivative.
        for _ in range(15):
            idx = random_whittaker_index(rng)
            z = cmath.rect(rng.uniform(0.5, 8.0), rng.uniform(-2.6, 2.6))
            h = 1e-6 * max(1.0, abs(z))
            second = (whittaker_m_deriv(idx, z + h) - whittaker_m_deriv(idx, z - h)) / (2.0 * h)
            value = whittaker_m(idx, z)
            residual = second + (-0.25 + idx.kappa / z + (0.25 - idx.mu**2) / z**2) * value
            assert abs(residual) <= 1e-6
