"""Tests for the phase and zeta building blocks.

Reference values are frozen from 40-digit mpmath evaluations
(mp.siegeltheta, mp.zeta, mp.lambertw, mp.loggamma) unless a value
is forced by the definition itself.
"""

import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special

from zetaphase import (
    AtZeroError,
    ThetaSeries,
    arg_gamma_quarter,
    arg_zeta_principal,
    hardy_z,
    lambert_w0,
    log_gamma_complex,
    theta_exact,
    theta_series,
    wrap_half_turns,
    zeta_critical_line,
)
from zetaphase.special import smooth_main

# mp.siegeltheta at 40 digits, rounded to double.
THETA_REFERENCE = {
    10.0: -3.0670743962898953,
    50.0: 26.461366070161410,
    100.0: 87.972165231787220,
    1000.0: 2034.5464280380316,
    10000.0: 31861.923830835821,
}

# mp.zeta(1/2 + it) at 40 digits.
ZETA_REFERENCE = {
    0.0: complex(-1.4603545088095868, 0.0),
    25.0: complex(0.0049845933640356754, -0.014012301962583383),
    100.0: complex(2.6926198856813241, -0.020386029602598162),
    1000.0: complex(0.35633436719439606, 0.93199783123299367),
    6500.0: complex(-0.10290070191834146, -0.37278653389112664),
}


class TestThetaExact:
    def test_reference_values(self):
        for t, want in THETA_REFERENCE.items():
            got = theta_exact(t)
            assert got == pytest.approx(want, abs=4e-12), t

    def test_odd_function(self):
        for t in (0.5, 3.0, 17.25, 4000.0):
            assert theta_exact(-t) == -theta_exact(t)
        assert theta_exact(0.0) == 0.0

    def test_sign_change_bracket(self):
        # theta has its positive-axis root between 17 and 18.
        assert theta_exact(17.0) < 0.0 < theta_exact(18.0)
        root = 17.845599540410861
        assert abs(theta_exact(root)) < 1e-11

    def test_monotone_increasing_above_root(self):
        ts = np.linspace(20.0, 9000.0, 200)
        vals = [theta_exact(float(t)) for t in ts]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestThetaSeries:
    def test_matches_exact_in_main_window(self):
        # Above t = 50 the series path and the exact path agree bitwise:
        # both round the same smooth main term and correction.
        for t in (50.0, 63.7, 200.0, 1234.5, 9999.0):
            assert theta_series(t) == theta_exact(t)

    def test_error_ladder_at_ten(self):
        # Error after k correction terms, frozen from the mpmath value.
        exact = -3.0670743962898953
        ladder = [2.1e-3, 1.3e-6, 4e-9, 3.1e-11, 5e-13]
        for order, bound in enumerate(ladder):
            assert abs(theta_series(10.0, order=order) - exact) < bound

    def test_first_correction_term(self):
        # The order-1 refinement at t adds exactly 1/(48 t).
        t = 10000.0
        delta = theta_series(t, order=1) - theta_series(t, order=0)
        assert delta == pytest.approx(1.0 / (48.0 * t), abs=5e-12)

    def test_domain_and_order_validation(self):
        with pytest.raises(ValueError):
            theta_series(9.0)
        with pytest.raises(ValueError):
            theta_series(100.0, order=9)
        with pytest.raises(ValueError):
            theta_series(100.0, order=-1)

    def test_series_object(self):
        series = ThetaSeries(order=2)
        assert series(100.0) == theta_series(100.0, order=2)
        with pytest.raises(ValueError):
            ThetaSeries(order=99)


def test_smooth_main_correlates_with_theta():
    # theta(t)/pi + 1 - smooth_main(t) equals the small tail correction
    # over pi; it must stay positive and shrink like 1/t.
    for t in (50.0, 100.0, 1000.0, 10000.0):
        gap = theta_exact(t) / math.pi + 1.0 - smooth_main(t)
        assert 0.0 < gap < 1.0 / (40.0 * t)


class TestLogGamma:
    def test_against_mpmath(self):
        cases = {
            complex(0.25, 0.5): complex(0.34025042040841979, -1.1951830098875903),
            complex(0.25, 2.5): complex(-3.2358405107546571, -0.59779566073996210),
        }
        for z, want in cases.items():
            got = log_gamma_complex(z)
            assert got.real == pytest.approx(want.real, abs=1e-12)
            assert got.imag == pytest.approx(want.imag, abs=1e-12)

    def test_pole_rejected(self):
        for z in (0.0, -1.0, -2.0 + 0.0j):
            with pytest.raises(ValueError):
                log_gamma_complex(complex(z))


class TestLambertW:
    def test_fixed_points(self):
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-15)
        assert lambert_w0(1.0) == pytest.approx(0.56714329040978387, abs=1e-15)
        assert lambert_w0(10.0) == pytest.approx(1.7455280027406994, abs=1e-14)

    def test_branch_point(self):
        assert lambert_w0(-1.0 / math.e) == pytest.approx(-1.0, abs=1e-7)

    def test_below_branch_point_rejected(self):
        with pytest.raises(ValueError):
            lambert_w0(-0.5)

    def test_defining_identity(self):
        for x in np.geomspace(1e-3, 1e8, 50):
            w = lambert_w0(float(x))
            assert w * math.exp(w) == pytest.approx(float(x), rel=1e-13)

    def test_against_scipy(self):
        for x in np.geomspace(0.01, 1e6, 40):
            ours = lambert_w0(float(x))
            ref = float(scipy.special.lambertw(float(x)).real)
            assert ours == pytest.approx(ref, rel=1e-14)


class TestZetaCriticalLine:
    def test_reference_values(self):
        for t, want in ZETA_REFERENCE.items():
            got = zeta_critical_line(t)
            assert abs(got - want) < 1e-9, t

    def test_window_enforced(self):
        with pytest.raises(ValueError):
            zeta_critical_line(-1.0)
        with pytest.raises(ValueError):
            zeta_critical_line(10001.0)


class TestHardyZ:
    def test_real_rotation_identity(self):
        rng = np.random.default_rng(7)
        ts = rng.uniform(2.0, 9990.0, size=120)
        for t in ts:
            t = float(t)
            z = hardy_z(t)
            rotated = complex(math.cos(theta_exact(t)), math.sin(theta_exact(t)))
            rotated *= zeta_critical_line(t)
            assert abs(z - rotated.real) <= 1e-8
            assert abs(rotated.imag) <= 1e-8 * max(1.0, abs(z))

    def test_window_enforced(self):
        with pytest.raises(ValueError):
            hardy_z(1.0)
        with pytest.raises(ValueError):
            hardy_z(10500.0)

    def test_sign_change_at_first_zero(self):
        assert hardy_z(14.0) * hardy_z(14.2) < 0.0


class TestWrapHalfTurns:
    def test_interval_convention(self):
        # Output lives in (-1, 1] with the boundary mapped to +1.
        assert wrap_half_turns(1.0) == 1.0
        assert wrap_half_turns(-1.0) == 1.0
        assert wrap_half_turns(3.0) == 1.0
        assert wrap_half_turns(0.0) == 0.0

    def test_periodicity(self):
        for x in (0.3, -0.45, 0.999):
            assert wrap_half_turns(x + 2.0) == pytest.approx(x, abs=1e-12)
            assert wrap_half_turns(x - 4.0) == pytest.approx(x, abs=1e-12)


class TestArgZetaPrincipal:
    def test_small_heights(self):
        # Frozen from mp.arg(mp.zeta(1/2 + in)) / pi at 40 digits.
        assert arg_zeta_principal(1.0) == pytest.approx(-0.437372012317, abs=1e-9)
        assert arg_zeta_principal(2.0) == pytest.approx(-0.195977582921, abs=1e-9)
        assert arg_zeta_principal(4000.0) == pytest.approx(-0.382343520341, abs=1e-9)

    def test_range(self):
        for t in np.linspace(1.0, 500.0, 97):
            v = arg_zeta_principal(float(t))
            assert -1.0 < v <= 1.0

    def test_at_zero_ordinate(self):
        # Double closest to the first zeta zero ordinate.
        with pytest.raises(AtZeroError):
            arg_zeta_principal(14.134725141734694)


class TestArgGammaQuarter:
    def test_reference_value(self):
        assert arg_gamma_quarter(1.0) == pytest.approx(-0.380438567847, abs=1e-9)

    def test_odd_and_zero(self):
        assert arg_gamma_quarter(0.0) == 0.0
        for t in (0.5, 12.0):
            assert arg_gamma_quarter(-t) == -arg_gamma_quarter(t)

    def test_range(self):
        for t in np.linspace(0.5, 300.0, 61):
            v = arg_gamma_quarter(float(t))
            assert -1.0 < v <= 1.0
