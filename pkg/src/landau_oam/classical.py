"""Classical cyclotron motion of a charge -e in a field B along +z.

The equation of motion m_e dv/dt = -e v x B rotates the velocity
counterclockwise at the cyclotron frequency. The guiding center used here is
X = x0 - vy0/omega, Y = y0 + vx0/omega, the only choice consistent with the
closed-form orbit x(t) = X + vy(t)/omega, y(t) = Y - vx(t)/omega at t = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .model import DomainError, OamAxis, OamKind, OamSpec, PhysicalConfig


@dataclass(frozen=True)
class InitialConditions:
    x0: float = 0.0
    y0: float = 0.0
    vx0: float = 0.0
    vy0: float = 0.0

    @property
    def v0(self) -> float:
        return math.hypot(self.vx0, self.vy0)

    @property
    def alpha(self) -> float:
        """Initial velocity phase; 0 for a particle at rest."""
        if self.v0 == 0:
            return 0.0
        return math.atan2(self.vy0, self.vx0)

    def cyclotron_radius(self, config: PhysicalConfig) -> float:
        return self.v0 / config.omega

    @classmethod
    def from_guiding_center(
        cls, X: float, Y: float, v0: float, alpha: float, config: PhysicalConfig
    ) -> "InitialConditions":
        """Start on the orbit around (X, Y) with speed v0 and phase alpha."""
        vx0, vy0 = v0 * math.cos(alpha), v0 * math.sin(alpha)
        w = config.omega
        return cls(X + vy0 / w, Y - vx0 / w, vx0, vy0)


@dataclass(frozen=True)
class ClassicalState:
    t: float
    x: float
    y: float
    vx: float
    vy: float


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Column arrays of a sampled orbit."""

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    vx: np.ndarray
    vy: np.ndarray

    def __len__(self):
        return len(self.t)

    def state(self, i: int) -> ClassicalState:
        return ClassicalState(*(float(getattr(self, k)[i]) for k in ("t", "x", "y", "vx", "vy")))

    def final(self) -> ClassicalState:
        return self.state(-1)


def period(config: PhysicalConfig) -> float:
    return 2 * math.pi / config.omega


def guiding_center(ic: InitialConditions, config: PhysicalConfig) -> tuple[float, float]:
    w = config.omega
    return ic.x0 - ic.vy0 / w, ic.y0 + ic.vx0 / w


def guiding_center_of(state, config: PhysicalConfig) -> tuple:
    """Guiding center from position and mechanical momentum Pi = m_e v.

    X = x - Pi_y/(eB), Y = y + Pi_x/(eB); works on states and trajectories.
    """
    pi_x, pi_y = config.m_e * state.vx, config.m_e * state.vy
    return state.x - pi_y / config.eB, state.y + pi_x / config.eB


def _closed_form(ic, config, t):
    w = config.omega
    c, s = np.cos(w * t), np.sin(w * t)
    vx = ic.vx0 * c - ic.vy0 * s
    vy = ic.vx0 * s + ic.vy0 * c
    # written relative to the start so that t = 0 returns x0, y0 exactly
    x = ic.x0 + (vy - ic.vy0) / w
    y = ic.y0 - (vx - ic.vx0) / w
    return x, y, vx, vy


def closed_form_state(ic: InitialConditions, config: PhysicalConfig, t: float) -> ClassicalState:
    x, y, vx, vy = _closed_form(ic, config, t)
    return ClassicalState(float(t), float(x), float(y), float(vx), float(vy))


def closed_form_trajectory(ic: InitialConditions, config: PhysicalConfig, times) -> Trajectory:
    t = np.asarray(times, dtype=float)
    return Trajectory(t, *_closed_form(ic, config, t))


def classical_oam(state, ic: InitialConditions, config: PhysicalConfig, spec: OamSpec):
    """Mechanical or pseudo OAM about the origin or the guiding center.

    ``state`` may be a ClassicalState or a Trajectory (vectorized).
    """
    if spec.kind is OamKind.CANONICAL:
        raise DomainError("canonical OAM needs a gauge potential; not defined classically")
    m_e, eB = config.m_e, config.eB
    if spec.axis is OamAxis.ORIGIN:
        dx, dy = state.x, state.y
    else:
        X, Y = guiding_center(ic, config)
        dx, dy = state.x - X, state.y - Y
    value = m_e * (dx * state.vy - dy * state.vx)
    if spec.kind is OamKind.PSEUDO:
        value = value - eB / 2 * (dx * dx + dy * dy)
    return value


def time_average_oam(ic: InitialConditions, config: PhysicalConfig, spec: OamSpec, samples: int = 64) -> float:
    """(1/T) int_0^T L dt by composite Simpson over the closed-form orbit."""
    if samples < 16:
        raise DomainError(f"samples must be >= 16, got {samples}")
    T = period(config)
    t = np.linspace(0.0, T, samples + 1)
    values = classical_oam(closed_form_trajectory(ic, config, t), ic, config, spec)
    return float(simpson(values, x=t) / T)


def _rhs(state, w):
    x, y, vx, vy = state
    return np.array([vx, vy, -w * vy, w * vx])


def integrate_rk4(ic: InitialConditions, config: PhysicalConfig, dt: float, steps: int) -> Trajectory:
    """Classic fourth-order Runge-Kutta for m_e dv/dt = -e v x B."""
    if not (math.isfinite(dt) and dt > 0):
        raise DomainError(f"dt must be > 0, got {dt!r}")
    if steps < 0:
        raise DomainError(f"steps must be >= 0, got {steps}")
    w = config.omega
    out = np.empty((steps + 1, 4))
    y = np.array([ic.x0, ic.y0, ic.vx0, ic.vy0], dtype=float)
    out[0] = y
    for i in range(steps):
        k1 = _rhs(y, w)
        k2 = _rhs(y + 0.5 * dt * k1, w)
        k3 = _rhs(y + 0.5 * dt * k2, w)
        k4 = _rhs(y + dt * k3, w)
        y = y + dt / 6.0 * (k1 + 2.0 * (k2 + k3) + k4)
        out[i + 1] = y
    t = dt * np.arange(steps + 1)
    return Trajectory(t, out[:, 0], out[:, 1], out[:, 2], out[:, 3])


def oam_rate(traj: Trajectory, ic: InitialConditions, config: PhysicalConfig, spec: OamSpec) -> np.ndarray:
    """Central finite-difference dL/dt along a uniformly sampled trajectory."""
    L = classical_oam(traj, ic, config, spec)
    dt = traj.t[1] - traj.t[0]
    return (L[2:] - L[:-2]) / (2 * dt)
