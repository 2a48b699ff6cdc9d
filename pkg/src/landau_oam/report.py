"""Verification reports: Table-1 sweep, identity suite, classical orbit, spectrum.

Each command returns a :class:`Report` made of :class:`ReportRecord` rows.
A record passes iff its residual is <= its tolerance, and a report passes iff
every record does. Output is deterministic for a given :class:`RunConfig`.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import classical, fock
from .model import (
    ALL_OAM_SPECS,
    DomainError,
    LandauQuantumNumbers,
    OamAxis,
    OamKind,
    OamSpec,
    PhysicalConfig,
    landau_energy,
    state_grid,
    table1_value,
)
from .wavefunction import (
    QuadratureRule,
    energy_parts,
    expectation_energy,
    expectation_oam,
    expectation_r2,
    norm_check,
)

TOL_EXPECTATION = 1e-8
TOL_IDENTITY = 1e-10
TOL_NORM = 1e-10
TOL_HERMITIAN = 1e-12

TRAJECTORY_COLUMNS = (
    "t", "x", "y", "vx", "vy", "L_mech_origin", "L_ps_origin", "L_mech_gc", "L_ps_gc",
)

# Provenance labels attached to expected values.
SRC_TABLE = {
    "L_can_origin": "closed form: <L_can> about origin = m",
    "L_mech_origin": "closed form: <L_mech> about origin = 2n+1",
    "L_ps_origin": "closed form: <L_ps> about origin = m",
    "L_can_gc": "closed form: <L_can> about guiding center = (2n+1)/2",
    "L_mech_gc": "closed form: <L_mech> about guiding center = 2n+1",
    "L_ps_gc": "closed form: <L_ps> about guiding center = (2n+1)/2",
}
SRC_ENERGY = "Landau level E_n = omega (n + 1/2)"
SRC_RC2 = "cyclotron radius <r_c^2> = (2n+1) l_B^2"
SRC_R2 = "guiding-center distance <R^2> = (2n-2m+1) l_B^2"
SRC_RSUM = "<r^2> = <r_c^2> + <R^2> = 2 l_B^2 (2n-m+1)"
SRC_OSC = "oscillator part <H_osc> = (2n-m+1) omega_L"
SRC_LARMOR = "Larmor term omega_L <L_can> = m omega_L"
SRC_OPERATOR = {
    "conservation": "guiding center, R^2 and L_ps commute with H",
    "commutator": "[X, Y] = i l_B^2 and canonical ladder algebra",
    "identity": "L_mech_gc = 2H/omega, L_ps_gc = H/omega, Johnson-Lippmann relation",
    "hermitian": "observables are Hermitian",
}
SRC_CLASSICAL = {
    "mech": "cyclotron OAM r_c m_e v0",
    "ps": "half the cyclotron OAM r_c m_e v0 / 2",
    "ps_origin": "pseudo OAM about origin r_c m_e v0/2 - (eB/2)(X^2+Y^2)",
    "mech_origin_t": "L_mech about origin = r_c m_e v0 + m_e (X vy - Y vx)",
    "mech_avg": "one-period average <L_mech>_T = r_c m_e v0",
    "gc": "guiding center is a constant of motion",
    "rk4": "closed-form orbit solves m_e dv/dt = -e v x B",
    "speed": "magnetic force does no work",
    "ps_rate": "pseudo OAM about origin is conserved",
}


@dataclass
class RunConfig:
    B: float = 1.0
    e: float = 1.0
    mass: float = 1.0
    nmax: int = 5
    mmin: int = -5
    cutoff: int = 20
    margin: int = 4
    quad_order: int = 64
    azimuthal_points: int = 128
    tol: float | None = None
    parallel: bool = False
    # classical orbit
    x0: float = 0.0
    y0: float = -1.0
    vx0: float = 1.0
    vy0: float = 0.0
    samples: int = 1000
    dt: float | None = None

    def __post_init__(self):
        if self.nmax < 0:
            raise DomainError(f"nmax must be >= 0, got {self.nmax}")
        if self.mmin > self.nmax:
            raise DomainError(f"empty grid: mmin={self.mmin} > nmax={self.nmax}")
        if not 0 < self.margin < self.cutoff:
            raise DomainError(f"need 0 < margin < cutoff, got margin={self.margin}, cutoff={self.cutoff}")
        if self.tol is not None and not self.tol > 0:
            raise DomainError(f"tolerance must be > 0, got {self.tol}")
        if self.samples < 16:
            raise DomainError(f"samples must be >= 16, got {self.samples}")
        if self.dt is not None and not self.dt > 0:
            raise DomainError(f"dt must be > 0, got {self.dt}")

    @property
    def config(self) -> PhysicalConfig:
        return PhysicalConfig(float(self.B), float(self.e), float(self.mass))

    @property
    def rule(self) -> QuadratureRule:
        return QuadratureRule(self.quad_order, self.azimuthal_points)

    def grid(self) -> list[LandauQuantumNumbers]:
        return state_grid(self.nmax, self.mmin)

    def tolerance(self, default: float) -> float:
        return default if self.tol is None else self.tol

    def as_dict(self) -> dict:
        d = asdict(self)
        # parallelism must not show up in the output
        d.pop("parallel")
        return d


def _display(v):
    return None if v is None else f"{v:.12g}"


@dataclass
class ReportRecord:
    check: str
    inputs: dict
    expected: float | None
    provenance: str
    computed: dict
    residual: float | None
    tolerance: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.residual is not None and self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "inputs": self.inputs,
            "expected": self.expected,
            "expected_display": _display(self.expected),
            "provenance": self.provenance,
            "computed": self.computed,
            "computed_display": {k: _display(v) for k, v in self.computed.items()},
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "error": self.error,
        }


@dataclass
class Report:
    command: str
    run: dict
    records: list[ReportRecord] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[ReportRecord]:
        return [r for r in self.records if not r.passed]

    def add(self, check, inputs, expected, provenance, computed, tolerance, residual=None, error=None):
        if residual is None and error is None:
            residual = max(abs(v - expected) for v in computed.values())
        rec = ReportRecord(
            check, inputs, None if expected is None else float(expected), provenance,
            {k: float(v) for k, v in computed.items()},
            None if residual is None else float(residual), float(tolerance), error,
        )
        self.records.append(rec)
        return rec

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "run": self.run,
            "passed": self.passed,
            "n_records": len(self.records),
            "n_failed": len(self.failures),
            "records": [r.to_dict() for r in self.records],
            **self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "inputs", "expected", "provenance", "route", "computed",
                    "residual", "tolerance", "passed"])
        for r in self.records:
            inputs = ";".join(f"{k}={v}" for k, v in sorted(r.inputs.items()))
            routes = r.computed.items() or [("", None)]
            for route, value in routes:
                w.writerow([r.check, inputs, _fmt(r.expected), r.provenance, route,
                            _fmt(value), _fmt(r.residual), _fmt(r.tolerance), r.passed])
        return buf.getvalue()


def _fmt(v):
    return "" if v is None else repr(float(v))


def _sweep(run: RunConfig, fn: Callable, states):
    """Map ``fn`` over states; ordering is preserved either way."""
    if run.parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(fn, states))
    return [fn(s) for s in states]


def _qn_inputs(qn):
    return {"n": qn.n, "m": qn.m}


def cmd_table1(run: RunConfig) -> Report:
    """Six OAM expectation values per state from both quantum routes."""
    config, rule = run.config, run.rule
    ops = fock.build_operator_set(config, run.cutoff)
    report = Report("table1", run.as_dict())
    tol = run.tolerance(TOL_EXPECTATION)

    def row(qn):
        quad = {s.label: expectation_oam(qn, config, s, rule) for s in ALL_OAM_SPECS}
        try:
            fk = {s.label: fock.expectation_fock(qn, ops, s, run.margin) for s in ALL_OAM_SPECS}
            err = None
        except DomainError as exc:
            fk, err = None, str(exc)
        return qn, quad, fk, err

    table = []
    for qn, quad, fk, err in _sweep(run, row, run.grid()):
        line = {"n": qn.n, "m": qn.m}
        for s in ALL_OAM_SPECS:
            computed = {"quadrature": quad[s.label]}
            if fk is not None:
                computed["fock"] = fk[s.label]
            report.add(f"table1:{s.label}", _qn_inputs(qn), table1_value(qn, s), SRC_TABLE[s.label],
                       computed, tol, error=err)
            line[s.label] = table1_value(qn, s)
        table.append(line)
    report.extra["table"] = table
    return report


def cmd_verify(run: RunConfig, ops_transform: Callable | None = None) -> Report:
    """Operator identities, norms, radii, energy split and route agreement.

    ``ops_transform`` is a test hook applied to the freshly built operator set.
    """
    config, rule = run.config, run.rule
    ops = fock.build_operator_set(config, run.cutoff)
    if ops_transform is not None:
        ops = ops_transform(ops)
    P = fock.interior_projector(run.cutoff, run.margin)
    report = Report("verify", run.as_dict())
    fock_in = {"cutoff": run.cutoff, "margin": run.margin}

    for name, res in fock.hermiticity_checks(ops).items():
        report.add(f"hermitian:{name}", fock_in, 0.0, SRC_OPERATOR["hermitian"], {},
                   run.tolerance(TOL_HERMITIAN), residual=res)
    for group, results in (
        ("commutator", fock.commutation_checks(ops, P)),
        ("conservation", fock.conservation_checks(ops, P)),
        ("identity", fock.identity_checks(ops, P, config)),
    ):
        for name, res in results.items():
            report.add(f"{group}:{name}", fock_in, 0.0, SRC_OPERATOR[group], {},
                       run.tolerance(TOL_IDENTITY), residual=res)

    l2, w_L = config.l_B**2, config.omega_L

    def per_state(qn):
        out = {"norm": norm_check(qn, config, rule), "r2": expectation_r2(qn, config, rule)}
        out["osc"], out["larmor"] = energy_parts(qn, config, rule)
        out["quad"] = {s.label: expectation_oam(qn, config, s, rule) for s in ALL_OAM_SPECS}
        try:
            out["fock"] = {s.label: fock.expectation_fock(qn, ops, s, run.margin) for s in ALL_OAM_SPECS}
            out["rc2"] = fock.expectation_fock(qn, ops, "r_c2", run.margin)
            out["R2"] = fock.expectation_fock(qn, ops, "R2", run.margin)
            out["error"] = None
        except DomainError as exc:
            out["error"] = str(exc)
        return qn, out

    tol_e = run.tolerance(TOL_EXPECTATION)
    tol_n = run.tolerance(TOL_NORM)
    tol_i = run.tolerance(TOL_IDENTITY)
    for qn, o in _sweep(run, per_state, run.grid()):
        qi = _qn_inputs(qn)
        n, m = qn.n, qn.m
        report.add("norm", qi, 1.0, "normalized symmetric-gauge eigenfunction",
                   {"quadrature": o["norm"]}, tol_n)
        report.add("radii:r^2", qi, 2 * l2 * (2 * n - m + 1), SRC_RSUM, {"quadrature": o["r2"]}, tol_e)
        report.add("energy:H_osc", qi, (2 * n - m + 1) * w_L, SRC_OSC, {"quadrature": o["osc"]}, tol_e)
        report.add("energy:larmor", qi, m * w_L, SRC_LARMOR, {"quadrature": o["larmor"]}, tol_e)
        report.add("energy:H", qi, landau_energy(config, n), SRC_ENERGY,
                   {"quadrature": o["osc"] + o["larmor"]}, tol_e)
        err = o["error"]
        if err is None:
            report.add("radii:r_c^2", qi, (2 * n + 1) * l2, SRC_RC2, {"fock": o["rc2"]}, tol_i)
            report.add("radii:R^2", qi, (2 * n - 2 * m + 1) * l2, SRC_R2, {"fock": o["R2"]}, tol_i)
            sign_ok = fock.sign_correlation(o["fock"]["L_can_origin"], o["rc2"], o["R2"])
            report.add("sign:L_can>0<=>r_c^2>R^2", qi, None, "Johnson-Lippmann sign correlation",
                       {"L_can": o["fock"]["L_can_origin"], "r_c2-R2": o["rc2"] - o["R2"]},
                       0.0, residual=0.0 if sign_ok else 1.0)
            for s in ALL_OAM_SPECS:
                res = abs(o["quad"][s.label] - o["fock"][s.label])
                report.add(f"oracle:{s.label}", qi, table1_value(qn, s), SRC_TABLE[s.label],
                           {"quadrature": o["quad"][s.label], "fock": o["fock"][s.label]}, tol_e,
                           residual=max(res, abs(o["quad"][s.label] - table1_value(qn, s)),
                                        abs(o["fock"][s.label] - table1_value(qn, s))))
        else:
            for check in ("radii:r_c^2", "radii:R^2", "oracle"):
                report.add(check, qi, None, "truncation guard", {}, tol_e, error=err)
    return report


def _classical_setup(run: RunConfig):
    config = run.config
    ic = classical.InitialConditions(run.x0, run.y0, run.vx0, run.vy0)
    T = classical.period(config)
    dt = run.dt if run.dt is not None else T / 1000
    steps = max(int(round(T / dt)), 1)
    return config, ic, T, dt, steps


def trajectory_rows(traj: classical.Trajectory, ic, config) -> np.ndarray:
    cols = [traj.t, traj.x, traj.y, traj.vx, traj.vy]
    for label in ("L_mech_origin", "L_ps_origin", "L_mech_gc", "L_ps_gc"):
        spec = next(s for s in ALL_OAM_SPECS if s.label == label)
        cols.append(np.broadcast_to(classical.classical_oam(traj, ic, config, spec), traj.t.shape))
    return np.column_stack(cols)


def trajectory_csv(traj: classical.Trajectory, ic, config) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRAJECTORY_COLUMNS)
    for row in trajectory_rows(traj, ic, config):
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def cmd_classical(run: RunConfig):
    """Closed-form and RK4 orbits plus checks of the four classical OAMs.

    Returns ``(report, closed_form_trajectory, rk4_trajectory)``.
    """
    config, ic, T, dt, steps = _classical_setup(run)
    m_e, eB, w = config.m_e, config.eB, config.omega
    X, Y = classical.guiding_center(ic, config)
    r_c, v0 = ic.cyclotron_radius(config), ic.v0
    cyc = r_c * m_e * v0

    closed = classical.closed_form_trajectory(ic, config, np.linspace(0.0, T, run.samples + 1))
    rk4 = classical.integrate_rk4(ic, config, dt, steps)
    report = Report("classical", run.as_dict())
    inputs = {"x0": ic.x0, "y0": ic.y0, "vx0": ic.vx0, "vy0": ic.vy0}

    def spec(kind, axis):
        return OamSpec(OamKind[kind], OamAxis[axis])

    series = {
        s.label: np.broadcast_to(classical.classical_oam(closed, ic, config, s), closed.t.shape)
        for s in ALL_OAM_SPECS if s.kind is not OamKind.CANONICAL
    }
    averages = {
        s.label: classical.time_average_oam(ic, config, s, run.samples)
        for s in ALL_OAM_SPECS if s.kind is not OamKind.CANONICAL
    }
    tight = run.tolerance(1e-12)

    Xt, Yt = classical.guiding_center_of(closed, config)
    drift = float(max(np.max(np.abs(Xt - X)), np.max(np.abs(Yt - Y))))
    report.add("guiding_center:closed_form", inputs, None, SRC_CLASSICAL["gc"],
               {"X": X, "Y": Y}, tight, residual=drift)
    Xr, Yr = classical.guiding_center_of(rk4, config)
    drift_rk4 = float(max(np.max(np.abs(Xr - X)), np.max(np.abs(Yr - Y))))
    report.add("guiding_center:rk4", inputs, None, SRC_CLASSICAL["gc"], {"X": X, "Y": Y},
               run.tolerance(1e-9), residual=drift_rk4)

    ps_origin = 0.5 * cyc - eB / 2 * (X * X + Y * Y)
    instantaneous = [
        ("L_mech_gc", cyc, SRC_CLASSICAL["mech"]),
        ("L_ps_gc", cyc / 2, SRC_CLASSICAL["ps"]),
        ("L_ps_origin", ps_origin, SRC_CLASSICAL["ps_origin"]),
    ]
    for label, expected, src in instantaneous:
        res = float(np.max(np.abs(series[label] - expected)))
        report.add(f"instantaneous:{label}", inputs, expected, src,
                   {"closed_form": float(series[label][0])}, tight, residual=res)
    oscill = m_e * (X * closed.vy - Y * closed.vx)
    res = float(np.max(np.abs(series["L_mech_origin"] - (cyc + oscill))))
    report.add("instantaneous:L_mech_origin", inputs, cyc, SRC_CLASSICAL["mech_origin_t"],
               {"closed_form": float(series["L_mech_origin"][0])}, tight, residual=res)

    avg_expected = {
        "L_mech_origin": (cyc, SRC_CLASSICAL["mech_avg"]),
        "L_ps_origin": (ps_origin, SRC_CLASSICAL["ps_origin"]),
        "L_mech_gc": (cyc, SRC_CLASSICAL["mech"]),
        "L_ps_gc": (cyc / 2, SRC_CLASSICAL["ps"]),
    }
    for label, value in averages.items():
        expected, src = avg_expected[label]
        report.add(f"time_average:{label}", inputs, expected, src, {"closed_form": value},
                   run.tolerance(1e-9))

    reference = classical.closed_form_trajectory(ic, config, rk4.t)
    err = max(float(np.max(np.abs(getattr(rk4, k) - getattr(reference, k)))) for k in ("x", "y", "vx", "vy"))
    report.add("rk4_vs_closed_form", {**inputs, "dt": dt, "steps": steps}, 0.0, SRC_CLASSICAL["rk4"],
               {}, run.tolerance(1e-9) * max(r_c, v0), residual=err)
    speed = np.hypot(rk4.vx, rk4.vy)
    report.add("rk4_speed_drift", {**inputs, "dt": dt, "steps": steps}, v0, SRC_CLASSICAL["speed"],
               {"rk4_final": float(speed[-1])}, run.tolerance(1e-10) * v0,
               residual=float(np.max(np.abs(speed - v0))))
    if len(rk4) >= 3:
        rate = classical.oam_rate(rk4, ic, config, spec("PSEUDO", "ORIGIN"))
        report.add("rk4_dL_ps_origin/dt", {**inputs, "dt": dt, "steps": steps}, 0.0,
                   SRC_CLASSICAL["ps_rate"], {}, run.tolerance(1e-6) * w * cyc,
                   residual=float(np.max(np.abs(rate))))

    report.extra["summary"] = {
        "guiding_center": [X, Y],
        "cyclotron_radius": r_c,
        "v0": v0,
        "period": T,
        "time_averages": averages,
    }
    return report, closed, rk4


def cmd_spectrum(run: RunConfig) -> Report:
    config, rule = run.config, run.rule
    ops = fock.build_operator_set(config, run.cutoff)
    eig = fock.interior_spectrum(ops, run.margin)
    report = Report("spectrum", run.as_dict())
    tol = run.tolerance(TOL_EXPECTATION)
    levels = []
    for n in range(run.nmax + 1):
        exact = landau_energy(config, n)
        qn = LandauQuantumNumbers(n, 0)
        quad = expectation_energy(qn, config, rule)
        near = eig[np.abs(eig - exact) <= 0.25 * config.omega]
        want = fock.level_multiplicity(run.cutoff, run.margin, n)
        inputs = {"n": n}
        if len(near) == 0:
            report.add("energy", inputs, exact, SRC_ENERGY, {"quadrature": quad}, tol,
                       error=f"level n={n} has no interior Fock states")
        else:
            computed = {"quadrature": quad, "fock": float(near[np.argmax(np.abs(near - exact))])}
            report.add("energy", inputs, exact, SRC_ENERGY, computed, tol)
        report.add("multiplicity", inputs, want, "interior degeneracy: one ket per admissible n_b",
                   {"fock": len(near)}, 0.0)
        levels.append({"n": n, "E_n": exact})
    report.extra["levels"] = levels
    return report
