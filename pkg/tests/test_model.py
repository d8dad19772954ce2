"""Tests for the dissipative model: influence action, decoherence factor and times.

Frozen reference numbers were computed independently with mpmath at 50
digits, straight from the closed formulas.
"""

import math

import pytest
from hypothesis import given, strategies as st

from mirrorphase import (DomainError, ModelParams, NoDecoherenceError,
                         decoherence_factor, decoherence_time,
                         dephasing_multiplier, friction_factor,
                         im_influence_action, im_inout_action)

from conftest import params_fig2


def make(gamma0=0.05, lam=5.0, omega=0.03, v=0.5, omega0=1.0):
    return ModelParams(gamma0=gamma0, lambda_tilde=lam, omega_tilde=omega,
                       velocity=v, omega0_tilde=omega0)


class TestParams:
    def test_valid(self):
        make()

    @pytest.mark.parametrize("kwargs", [
        dict(gamma0=-0.1), dict(lam=-1.0), dict(omega=0.0), dict(omega=-0.03),
        dict(omega0=0.0), dict(v=-0.1), dict(v=1.0), dict(v=1.5),
        dict(gamma0=math.nan), dict(v=math.nan),
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(DomainError):
            make(**kwargs)


class TestFrictionFactor:
    def test_rest_is_exactly_zero(self):
        assert friction_factor(make(v=0.0)) == 0.0

    def test_no_plate_coupling(self):
        assert friction_factor(make(lam=0.0)) == 0.0

    def test_small_omega_limit(self):
        # exponent vanishes, leaving v/(1 - v^2)
        value = friction_factor(make(lam=1.0, omega=1e-12, v=0.5))
        assert value == pytest.approx(0.5 / 0.75, rel=1e-9)

    def test_frozen_value(self):
        # mpmath, 50 digits
        assert friction_factor(make(lam=1.0, v=0.5)) == pytest.approx(
            0.6008631005129370, rel=1e-13)

    def test_strictly_increasing_in_velocity(self):
        grid = [0.05 * k for k in range(1, 20)]
        values = [friction_factor(make(lam=1.0, v=v)) for v in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    @given(lam=st.floats(0.0, 20.0), omega=st.floats(1e-6, 10.0),
           v=st.floats(0.0, 0.99))
    def test_bounded_by_zero_frequency_envelope(self, lam, omega, v):
        # the exponential factor never exceeds 1
        assert 0.0 <= friction_factor(make(lam=lam, omega=omega, v=v)) \
            <= lam * lam * v / (1.0 - v * v) + 1e-15


class TestInfluenceAction:
    def test_zero_coupling(self):
        assert im_influence_action(make(gamma0=0.0), math.pi) == 0.0

    def test_vacuum_only_frozen(self):
        assert im_influence_action(make(v=0.0), math.pi) == pytest.approx(
            0.07853981633974483, rel=1e-14)

    def test_full_frozen(self):
        assert im_influence_action(make(), math.pi) == pytest.approx(
            1.2714217247200951, rel=1e-13)

    def test_multiplier_frozen(self):
        assert dephasing_multiplier(make()) == pytest.approx(
            16.18824417949009, rel=1e-13)

    @given(s=st.floats(0.0, 100.0), a=st.floats(0.0, 50.0))
    def test_linear_in_time(self, s, a):
        p = make()
        assert im_influence_action(p, a * s) == pytest.approx(
            a * im_influence_action(p, s), rel=1e-12, abs=1e-300)

    def test_strictly_increasing_in_velocity(self):
        grid = [0.05 * k for k in range(1, 20)]
        values = [im_influence_action(make(v=v), math.pi) for v in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_negative_time_rejected(self):
        with pytest.raises(DomainError):
            im_influence_action(make(), -0.1)


class TestDecoherenceFactor:
    def test_starts_at_one(self):
        assert decoherence_factor(make(), 0.0) == 1.0

    def test_vacuum_only_frozen(self):
        assert decoherence_factor(make(v=0.0), math.pi) == pytest.approx(
            0.9244652503762559, rel=1e-14)

    def test_full_frozen(self):
        assert decoherence_factor(make(), math.pi) == pytest.approx(
            0.28043264020769914, rel=1e-13)

    def test_strictly_decreasing_in_time(self):
        p = make()
        values = [decoherence_factor(p, 0.1 * k) for k in range(50)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_low_velocity_limit(self):
        # friction and the v^2 enhancement both switch off as v -> 0
        p = params_fig2(1e-6)
        for k in range(1, 9):
            s = 0.5 * k * math.pi
            assert abs(decoherence_factor(p, s)
                       - math.exp(-0.5 * p.gamma0 * s)) < 1e-6

    @given(s=st.floats(0.0, 50.0), v=st.floats(0.0, 0.95))
    def test_range(self, s, v):
        r = decoherence_factor(make(v=v), s)
        assert 0.0 < r <= 1.0

    def test_extreme_action_underflows_to_zero(self):
        # beyond action ~745 the factor is below the smallest double
        assert decoherence_factor(make(v=0.99), 1e4) == 0.0


class TestDecoherenceTime:
    def test_vacuum_only(self):
        assert decoherence_time(make(v=0.0)) == pytest.approx(40.0, abs=1e-9)

    def test_unit_multiplier(self):
        assert decoherence_time(make(gamma0=2.0, v=0.0)) == pytest.approx(1.0, abs=1e-10)

    def test_full_frozen(self):
        assert decoherence_time(make()) == pytest.approx(2.4709288763186882, rel=1e-10)

    def test_residual(self):
        for p in [make(), make(gamma0=0.7, lam=12.0, v=0.9), make(gamma0=1e-4, v=0.0)]:
            assert abs(im_influence_action(p, decoherence_time(p)) - 1.0) < 1e-9

    def test_no_decoherence(self):
        with pytest.raises(NoDecoherenceError):
            decoherence_time(make(gamma0=0.0))


class TestInOutAction:
    def test_rest_is_zero(self):
        assert im_inout_action(make(v=0.0, omega0=0.03), 1.0) == 0.0

    def test_zero_coupling_is_zero(self):
        assert im_inout_action(make(gamma0=0.0, omega0=0.03), 1.0) == 0.0

    def test_frozen_value(self):
        # mpmath, 50 digits
        assert im_inout_action(make(omega0=0.03), 1.0) == pytest.approx(
            0.43232113898289178, rel=1e-13)

    def test_linear_in_flight_time(self):
        p = make(omega0=0.03)
        assert im_inout_action(p, 2.0) == pytest.approx(
            2.0 * im_inout_action(p, 1.0), rel=1e-14)

    def test_negative_flight_time_rejected(self):
        with pytest.raises(DomainError):
            im_inout_action(make(omega0=0.03), -1.0)
