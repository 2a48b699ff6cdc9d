import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau_oam.classical import (
    InitialConditions,
    closed_form_state,
    closed_form_trajectory,
    classical_oam,
    guiding_center,
    guiding_center_of,
    integrate_rk4,
    oam_rate,
    period,
    time_average_oam,
)
from landau_oam.model import DomainError, OamAxis, OamKind, OamSpec, make_config

MECH_O = OamSpec(OamKind.MECHANICAL, OamAxis.ORIGIN)
PS_O = OamSpec(OamKind.PSEUDO, OamAxis.ORIGIN)
MECH_GC = OamSpec(OamKind.MECHANICAL, OamAxis.GUIDING_CENTER)
PS_GC = OamSpec(OamKind.PSEUDO, OamAxis.GUIDING_CENTER)
CLASSICAL_SPECS = (MECH_O, PS_O, MECH_GC, PS_GC)

coord = st.floats(-10, 10)
speed = st.floats(0, 5)
configs = st.builds(make_config, st.floats(0.2, 5), st.floats(0.2, 5), st.floats(0.2, 5))


def case_a(config, v0=1.0):
    return InitialConditions(0.0, -v0 / config.omega, v0, 0.0)


def test_guiding_center_examples(config):
    assert guiding_center(InitialConditions(0, 0, 2.0, 0), config) == (0.0, 2.0)
    assert guiding_center(InitialConditions(1, 2, 0, 0), config) == (1.0, 2.0)
    assert guiding_center(case_a(config, 1.5), config) == (0.0, 0.0)


def test_from_guiding_center(odd_config):
    ic = InitialConditions.from_guiding_center(3.0, 4.0, 1.2, 0.4, odd_config)
    assert guiding_center(ic, odd_config) == pytest.approx((3.0, 4.0), abs=1e-14)
    assert ic.v0 == pytest.approx(1.2)
    assert ic.alpha == pytest.approx(0.4)


def test_alpha_quadrant():
    assert InitialConditions(0, 0, -1, -1).alpha == pytest.approx(-3 * math.pi / 4)
    assert InitialConditions(0, 0, 0, 0).alpha == 0.0


def test_initial_state_exact(odd_config):
    ic = InitialConditions(0.3, -1.7, 0.9, -2.2)
    s = closed_form_state(ic, odd_config, 0.0)
    assert (s.x, s.y, s.vx, s.vy) == (ic.x0, ic.y0, ic.vx0, ic.vy0)


def test_periodicity(odd_config):
    ic = InitialConditions(0.3, -1.7, 0.9, -2.2)
    s0 = closed_form_state(ic, odd_config, 0.0)
    s1 = closed_form_state(ic, odd_config, period(odd_config))
    assert np.allclose([s1.x, s1.y, s1.vx, s1.vy], [s0.x, s0.y, s0.vx, s0.vy], atol=1e-12, rtol=0)


def test_quarter_turn_counterclockwise(config):
    s = closed_form_state(case_a(config), config, period(config) / 4)
    assert (s.x, s.y) == pytest.approx((1.0, 0.0), abs=1e-15)
    assert (s.vx, s.vy) == pytest.approx((0.0, 1.0), abs=1e-15)


def test_closed_form_solves_eom(odd_config):
    # central differences of velocity against -(e/m) v x B
    ic = InitialConditions(1.0, 2.0, -0.5, 0.8)
    h = 1e-5
    w = odd_config.omega
    for t in (0.1, 1.3, 4.0):
        a, b = closed_form_state(ic, odd_config, t - h), closed_form_state(ic, odd_config, t + h)
        s = closed_form_state(ic, odd_config, t)
        assert (b.vx - a.vx) / (2 * h) == pytest.approx(-w * s.vy, abs=1e-8)
        assert (b.vy - a.vy) / (2 * h) == pytest.approx(w * s.vx, abs=1e-8)
        assert (b.x - a.x) / (2 * h) == pytest.approx(s.vx, abs=1e-8)


def test_canonical_rejected(config):
    ic = case_a(config)
    with pytest.raises(DomainError):
        classical_oam(closed_form_state(ic, config, 0.0), ic, config,
                      OamSpec(OamKind.CANONICAL, OamAxis.ORIGIN))


def test_case_a_values(odd_config):
    v0 = 1.3
    ic = case_a(odd_config, v0)
    cyc = ic.cyclotron_radius(odd_config) * odd_config.m_e * v0
    traj = closed_form_trajectory(ic, odd_config, np.linspace(0, period(odd_config), 97))
    for s, expected in ((MECH_O, cyc), (MECH_GC, cyc), (PS_O, cyc / 2), (PS_GC, cyc / 2)):
        assert np.max(np.abs(classical_oam(traj, ic, odd_config, s) - expected)) <= 1e-12
        assert time_average_oam(ic, odd_config, s, 32) == pytest.approx(expected, abs=1e-12)


def test_case_b_values(config):
    ic = InitialConditions(3.0, 3.0, 1.0, 0.0)
    assert guiding_center(ic, config) == (3.0, 4.0)
    traj = closed_form_trajectory(ic, config, np.linspace(0, period(config), 101))
    assert np.max(np.abs(classical_oam(traj, ic, config, PS_O) - (-12.0))) <= 1e-12
    assert np.max(np.abs(classical_oam(traj, ic, config, MECH_GC) - 1.0)) <= 1e-12
    assert np.max(np.abs(classical_oam(traj, ic, config, PS_GC) - 0.5)) <= 1e-12
    assert time_average_oam(ic, config, MECH_O, 64) == pytest.approx(1.0, abs=1e-9)
    assert time_average_oam(ic, config, PS_O, 16) == pytest.approx(-12.0, abs=1e-12)
    # the origin mechanical OAM really oscillates
    assert np.ptp(classical_oam(traj, ic, config, MECH_O)) > 1.0


def test_rest_orbit(config):
    ic = InitialConditions(1.0, 2.0, 0.0, 0.0)
    s = closed_form_state(ic, config, 2.0)
    assert classical_oam(s, ic, config, MECH_GC) == 0
    assert classical_oam(s, ic, config, PS_GC) == 0
    assert classical_oam(s, ic, config, PS_O) == pytest.approx(-2.5)


def test_time_average_sample_guard(config):
    with pytest.raises(DomainError):
        time_average_oam(case_a(config), config, MECH_O, 8)


@settings(max_examples=60, deadline=None)
@given(coord, coord, speed, st.floats(-math.pi, math.pi), configs, st.floats(0, 20))
def test_orbit_invariants(X, Y, v0, alpha, config, t):
    ic = InitialConditions.from_guiding_center(X, Y, v0, alpha, config)
    gx, gy = guiding_center(ic, config)
    s = closed_form_state(ic, config, t)
    # guiding center re-extracted from the moving state
    assert guiding_center_of(s, config) == pytest.approx((gx, gy), abs=1e-12 * (1 + abs(X) + abs(Y) + v0))
    assert s.vx**2 + s.vy**2 == pytest.approx(ic.v0**2, rel=1e-12, abs=1e-300)
    cyc = ic.cyclotron_radius(config) * config.m_e * ic.v0
    mech_gc = classical_oam(s, ic, config, MECH_GC)
    ps_gc = classical_oam(s, ic, config, PS_GC)
    scale = 1e-12 * (1 + cyc + config.m_e * v0 * (abs(X) + abs(Y)))
    assert ps_gc == pytest.approx(mech_gc / 2, abs=scale)
    assert mech_gc == pytest.approx(cyc, abs=scale)
    assert mech_gc >= -scale
    # oscillating part of the origin OAM
    mech_o = classical_oam(s, ic, config, MECH_O)
    assert mech_o - cyc == pytest.approx(config.m_e * (gx * s.vy - gy * s.vx), abs=scale)


def test_rk4_rejects_bad_step(config):
    with pytest.raises(DomainError):
        integrate_rk4(case_a(config), config, 0.0, 10)


@pytest.mark.parametrize("ic", [
    InitialConditions(0.0, -1.0, 1.0, 0.0),
    InitialConditions(3.0, 3.0, 1.0, 0.0),
    InitialConditions(-2.0, 0.5, -0.3, 1.7),
])
def test_rk4_against_closed_form(config, ic):
    T = period(config)
    traj = integrate_rk4(ic, config, T / 1000, 1000)
    ref = closed_form_trajectory(ic, config, traj.t)
    scale = max(ic.cyclotron_radius(config), ic.v0)
    for k in ("x", "y", "vx", "vy"):
        assert np.max(np.abs(getattr(traj, k) - getattr(ref, k))) <= 1e-9 * scale
    speed = np.hypot(traj.vx, traj.vy)
    assert np.max(np.abs(speed - ic.v0)) <= 1e-10 * ic.v0
    gx, gy = guiding_center_of(traj, config)
    X, Y = guiding_center(ic, config)
    assert max(np.max(np.abs(gx - X)), np.max(np.abs(gy - Y))) <= 1e-9
    rate = oam_rate(traj, ic, config, PS_O)
    cyc = ic.cyclotron_radius(config) * config.m_e * ic.v0
    assert np.max(np.abs(rate)) <= 1e-6 * config.omega * cyc


def test_rk4_non_unit_config(odd_config):
    ic = InitialConditions(0.4, 0.1, 2.0, -1.0)
    T = period(odd_config)
    traj = integrate_rk4(ic, odd_config, T / 1000, 1000)
    s = closed_form_state(ic, odd_config, traj.t[-1])
    assert traj.final().x == pytest.approx(s.x, abs=1e-9 * max(ic.cyclotron_radius(odd_config), ic.v0))
