"""Exit criteria. Each test prints one PASS/FAIL line (also shown in the
terminal summary) and asserts at the stated tolerance."""

import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from landau_oam import classical, fock
from landau_oam.model import (
    ALL_OAM_SPECS,
    DEFAULT_CONFIG,
    LandauQuantumNumbers,
    OamAxis,
    OamKind,
    OamSpec,
    state_grid,
    table1_value,
)
from landau_oam.special import LaguerreParams, assoc_laguerre
from landau_oam.wavefunction import (
    QuadratureRule,
    dpsi_dr,
    energy_parts,
    expectation_energy,
    expectation_oam,
    expectation_r2,
    norm_check,
    psi_value,
)
from test_special import laguerre_series, relative_error

GRID = state_grid(5, -5)
CONFIG = DEFAULT_CONFIG


def record(name, passed, detail):
    ACCEPTANCE_LINES.append((name, passed, detail))
    print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    return passed


def test_1_table1_reproduction():
    start = time.perf_counter()
    rule = QuadratureRule()
    ops = fock.build_operator_set(CONFIG, 20)
    worst_quad = worst_fock = 0.0
    for qn in GRID:
        for s in ALL_OAM_SPECS:
            expected = table1_value(qn, s)
            worst_quad = max(worst_quad, abs(expectation_oam(qn, CONFIG, s, rule) - expected))
            worst_fock = max(worst_fock, abs(fock.expectation_fock(qn, ops, s, 4) - expected))
    elapsed = time.perf_counter() - start
    ok = worst_quad <= 1e-8 and worst_fock <= 1e-8 and elapsed < 10
    assert record("1 Table-1 reproduction", ok,
                  f"max |quad-exact|={worst_quad:.2e}, max |fock-exact|={worst_fock:.2e} "
                  f"(tol 1e-8), {elapsed:.2f}s (< 10s)")


def test_2_radii():
    rule = QuadratureRule()
    ops = fock.build_operator_set(CONFIG, 20)
    l2 = CONFIG.l_B**2
    worst_rc = worst_R = worst_sum = 0.0
    for qn in GRID:
        rc2 = fock.expectation_fock(qn, ops, "r_c2", 4)
        R2 = fock.expectation_fock(qn, ops, "R2", 4)
        worst_rc = max(worst_rc, abs(rc2 - (2 * qn.n + 1) * l2))
        worst_R = max(worst_R, abs(R2 - (2 * qn.n - 2 * qn.m + 1) * l2))
        worst_sum = max(worst_sum, abs(expectation_r2(qn, CONFIG, rule) - (rc2 + R2)))
    ok = worst_rc <= 1e-10 and worst_R <= 1e-10 and worst_sum <= 1e-8
    assert record("2 Radii formulas", ok,
                  f"r_c^2 {worst_rc:.2e}, R^2 {worst_R:.2e} (tol 1e-10); "
                  f"<r^2> vs sum {worst_sum:.2e} (tol 1e-8)")


def test_3_operator_identities():
    start = time.perf_counter()
    ops = fock.build_operator_set(CONFIG, 20)
    P = fock.interior_projector(20, 4)
    comm = fock.commutation_checks(ops, P)
    cons = fock.conservation_checks(ops, P)
    ident = fock.identity_checks(ops, P)
    required = {
        "[X,Y]-i l_B^2": comm["[X,Y]-i*l_B^2"],
        "[X,H]": cons["[X,H]"],
        "[Y,H]": cons["[Y,H]"],
        "[R^2,H]": cons["[R^2,H]"],
        "[L_ps,H]": cons["[L_ps_origin,H]"],
        "Johnson-Lippmann": ident["Johnson-Lippmann"],
        "L_mech_gc-2H/omega": ident["L_mech_gc-2H/omega"],
        "L_ps_gc-H/omega": ident["L_ps_gc-H/omega"],
        "L_can_gc relation": ident["L_can_gc-(2H/omega-L_can/2-eB*r^2/4)"],
    }
    elapsed = time.perf_counter() - start
    worst = max(required.values())
    ok = worst <= 1e-10 and elapsed < 5
    assert record("3 Operator identity suite", ok,
                  f"max interior residual {worst:.2e} over {len(required)} identities "
                  f"(tol 1e-10), {elapsed:.2f}s (< 5s)")


def test_4_energy_decomposition():
    rule = QuadratureRule()
    w, w_L = CONFIG.omega, CONFIG.omega_L
    worst_h = worst_osc = worst_larmor = 0.0
    for qn in GRID:
        h_osc, larmor = energy_parts(qn, CONFIG, rule)
        worst_h = max(worst_h, abs(expectation_energy(qn, CONFIG, rule) - w * (qn.n + 0.5)))
        worst_osc = max(worst_osc, abs(h_osc - (2 * qn.n - qn.m + 1) * w_L))
        worst_larmor = max(worst_larmor, abs(larmor - qn.m * w_L))
    ok = max(worst_h, worst_osc, worst_larmor) <= 1e-8
    assert record("4 Energy decomposition", ok,
                  f"<H> {worst_h:.2e}, <H_osc> {worst_osc:.2e}, Larmor {worst_larmor:.2e} (tol 1e-8)")


def test_5_classical_suite():
    start = time.perf_counter()
    cfg = CONFIG
    mech_o = OamSpec(OamKind.MECHANICAL, OamAxis.ORIGIN)
    ps_o = OamSpec(OamKind.PSEUDO, OamAxis.ORIGIN)
    T = classical.period(cfg)
    t = np.linspace(0, T, 257)

    ic_a = classical.InitialConditions(0.0, -1.0, 1.0, 0.0)
    cyc_a = ic_a.cyclotron_radius(cfg) * cfg.m_e * ic_a.v0
    traj_a = classical.closed_form_trajectory(ic_a, cfg, t)
    err_a = max(
        float(np.max(np.abs(classical.classical_oam(traj_a, ic_a, cfg, mech_o) - cyc_a))),
        float(np.max(np.abs(classical.classical_oam(traj_a, ic_a, cfg, ps_o) - cyc_a / 2))),
    )

    ic_b = classical.InitialConditions.from_guiding_center(3.0, 4.0, 1.0, 0.7, cfg)
    X, Y = classical.guiding_center(ic_b, cfg)
    cyc_b = ic_b.cyclotron_radius(cfg) * cfg.m_e * ic_b.v0
    err_avg = abs(classical.time_average_oam(ic_b, cfg, mech_o, 64) - cyc_b)
    ps_expected = 0.5 * cyc_b - cfg.eB / 2 * (X * X + Y * Y)
    traj_b = classical.closed_form_trajectory(ic_b, cfg, t)
    err_ps = float(np.max(np.abs(classical.classical_oam(traj_b, ic_b, cfg, ps_o) - ps_expected)))

    rk4 = classical.integrate_rk4(ic_b, cfg, T / 1000, 1000)
    ref = classical.closed_form_trajectory(ic_b, cfg, rk4.t)
    err_rk4 = max(float(np.max(np.abs(getattr(rk4, k) - getattr(ref, k)))) for k in ("x", "y", "vx", "vy"))
    rk4_tol = 1e-9 * max(ic_b.cyclotron_radius(cfg), ic_b.v0)
    rate = float(np.max(np.abs(classical.oam_rate(rk4, ic_b, cfg, ps_o))))
    rate_tol = 1e-6 * cfg.omega * cyc_b
    elapsed = time.perf_counter() - start

    ok = (err_a <= 1e-12 and err_avg <= 1e-9 and err_ps <= 1e-12 and err_rk4 <= rk4_tol
          and rate <= rate_tol and elapsed < 2)
    assert record("5 Classical suite", ok,
                  f"case A {err_a:.1e} (1e-12), <L_mech>_T {err_avg:.1e} (1e-9), "
                  f"L_ps origin {err_ps:.1e} (1e-12), RK4 {err_rk4:.1e} ({rk4_tol:.0e}), "
                  f"|dL_ps/dt| {rate:.1e} ({rate_tol:.0e}), {elapsed:.2f}s (< 2s)")


def test_6_property_suites():
    rule = QuadratureRule()
    ops = fock.build_operator_set(CONFIG, 20)
    details, ok = [], True

    worst_norm = max(abs(norm_check(qn, CONFIG, rule) - 1) for qn in GRID)
    ok &= worst_norm <= 1e-10
    details.append(f"norm {worst_norm:.1e}")

    worst_lag = 0.0
    for z in (0.1, 1.0, 5.0, 20.0):
        for p in range(16):
            for k in range(11):
                exact = laguerre_series(p, k, z)
                got = assoc_laguerre(LaguerreParams(p, k), z)
                worst_lag = max(worst_lag, relative_error(got, exact))
    ok &= worst_lag <= 1e-10
    details.append(f"Laguerre rel {worst_lag:.1e}")

    worst_fd = 0.0
    h = 1e-5 * CONFIG.l_B
    for qn in GRID:
        rng = np.random.default_rng(1000 * qn.n + qn.m + 50)
        for _ in range(20):
            r = rng.uniform(0.05, 4.0) * CONFIG.l_B
            phi = rng.uniform(0, 2 * np.pi)
            a = dpsi_dr(qn, CONFIG, r, phi)
            fd = (psi_value(qn, CONFIG, r + h, phi) - psi_value(qn, CONFIG, r - h, phi)) / (2 * h)
            worst_fd = max(worst_fd, abs(a - fd) / abs(a))
    ok &= worst_fd <= 1e-6
    details.append(f"d_r psi rel {worst_fd:.1e}")

    spread = 0.0
    for n in range(6):
        states = [q for q in GRID if q.n == n]
        for s in ALL_OAM_SPECS:
            if s.axis is OamAxis.ORIGIN and s.kind is not OamKind.MECHANICAL:
                continue
            for values in ([expectation_oam(q, CONFIG, s, rule) for q in states],
                           [fock.expectation_fock(q, ops, s, 4) for q in states]):
                spread = max(spread, max(values) - min(values))
    ok &= spread <= 1e-8
    details.append(f"m-spread {spread:.1e}")

    can = OamSpec(OamKind.CANONICAL, OamAxis.ORIGIN)
    sign_ok = all(
        fock.sign_correlation(
            fock.expectation_fock(q, ops, can, 4),
            fock.expectation_fock(q, ops, "r_c2", 4),
            fock.expectation_fock(q, ops, "R2", 4),
        )
        for q in GRID
    )
    ok &= sign_ok
    details.append(f"sign correlation {'holds' if sign_ok else 'broken'}")
    assert record("6 Property suites", bool(ok), ", ".join(details))
