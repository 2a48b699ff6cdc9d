"""Real-space route: symmetric-gauge Landau eigenfunctions and quadrature.

Radial integrals run over rho = r^2 / (2 l_B^2) with Gauss-Laguerre nodes, so
r dr = l_B^2 drho and every integrand is a polynomial in rho times e^{-rho}.
Azimuthal integrals are done on a uniform grid even though the phase cancels
analytically; the grid result acts as an independent consistency check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .model import (
    DomainError,
    LandauQuantumNumbers,
    OamAxis,
    OamKind,
    OamSpec,
    PhysicalConfig,
)
from .special import (
    LaguerreParams,
    assoc_laguerre,
    assoc_laguerre_derivative,
    normalization,
    radial_index,
)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Laguerre radial nodes (in rho) plus a uniform azimuthal grid."""

    radial_order: int = 64
    azimuthal_points: int = 128
    rho: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)
    phi: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.radial_order < 1 or self.azimuthal_points < 1:
            raise DomainError("quadrature orders must be positive")
        rho, w = np.polynomial.laguerre.laggauss(self.radial_order)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "weights", w)
        phi = 2 * np.pi * np.arange(self.azimuthal_points) / self.azimuthal_points
        object.__setattr__(self, "phi", phi)

    @property
    def dphi(self) -> float:
        return 2 * np.pi / self.azimuthal_points

    def radial(self, values) -> float:
        """sum_i w_i g(rho_i), i.e. int_0^inf e^{-rho} g(rho) drho."""
        return float(np.dot(self.weights, values))

    def azimuthal(self, values) -> complex:
        """Uniform-grid estimate of int_0^{2 pi} f(phi) dphi."""
        return complex(np.sum(values) * self.dphi)


DEFAULT_RULE = QuadratureRule()


def _radial_factors(qn: LandauQuantumNumbers, config: PhysicalConfig, r):
    """Radial profile stripped of e^{-rho/2}, and its r-derivative.

    psi = e^{i m phi}/sqrt(2 pi) * e^{-rho/2} * f(r), with
    f = N s^{|m|} L^{|m|}_{n_r}(rho) and s = r/(sqrt(2) l_B), so s^2 = rho.
    """
    r = np.asarray(r, dtype=float)
    l_B = config.l_B
    k = abs(qn.m)
    params = LaguerreParams(radial_index(qn.n, qn.m), k)
    norm = normalization(qn.n, qn.m, l_B)
    s = r / (math.sqrt(2) * l_B)
    rho = s * s
    lag = assoc_laguerre(params, rho)
    dlag = assoc_laguerre_derivative(params, rho)
    s_k = s**k if k else np.ones_like(s)
    f = norm * s_k * lag
    # d(s^k)/dr; s**(k-1) is 1 at the origin for k = 1
    ds_k = k * s ** (k - 1) / (math.sqrt(2) * l_B) if k else np.zeros_like(s)
    df = norm * (ds_k * lag + s_k * dlag * r / l_B**2)
    return rho, f, df


def psi_value(qn: LandauQuantumNumbers, config: PhysicalConfig, r: float, phi: float) -> complex:
    if not (math.isfinite(r) and r >= 0):
        raise DomainError(f"r must be finite and >= 0, got {r!r}")
    rho, f, _ = _radial_factors(qn, config, r)
    return complex(np.exp(1j * qn.m * phi) / math.sqrt(2 * np.pi) * math.exp(-rho / 2) * f)


def dpsi_dr(qn: LandauQuantumNumbers, config: PhysicalConfig, r: float, phi: float) -> complex:
    """Analytic radial derivative, using dL^k_p/dz = -L^{k+1}_{p-1}."""
    if not (math.isfinite(r) and r >= 0):
        raise DomainError(f"r must be finite and >= 0, got {r!r}")
    rho, f, df = _radial_factors(qn, config, r)
    radial = math.exp(-rho / 2) * (df - r / (2 * config.l_B**2) * f)
    return complex(np.exp(1j * qn.m * phi) / math.sqrt(2 * np.pi) * radial)


def _nodes(qn, config, rule):
    """Radial factors on the quadrature nodes, with r at each node."""
    r = config.l_B * np.sqrt(2 * rule.rho)
    rho, f, df = _radial_factors(qn, config, r)
    return r, f, df


def _phase_density(qn, rule) -> float:
    """int |e^{i m phi}|^2 / (2 pi) dphi on the azimuthal grid."""
    phase = np.exp(1j * qn.m * rule.phi) / math.sqrt(2 * np.pi)
    return rule.azimuthal(np.conj(phase) * phase).real


def norm_check(qn: LandauQuantumNumbers, config: PhysicalConfig, rule: QuadratureRule = DEFAULT_RULE) -> float:
    """int |psi|^2 r dr dphi."""
    _, f, _ = _nodes(qn, config, rule)
    return config.l_B**2 * rule.radial(f * f) * _phase_density(qn, rule)


def expectation_r2(qn: LandauQuantumNumbers, config: PhysicalConfig, rule: QuadratureRule = DEFAULT_RULE) -> float:
    r, f, _ = _nodes(qn, config, rule)
    return config.l_B**2 * rule.radial(r * r * f * f) * _phase_density(qn, rule)


def expectation_canonical(qn: LandauQuantumNumbers, config: PhysicalConfig, rule: QuadratureRule = DEFAULT_RULE) -> float:
    """<-i d/dphi> with the derivative taken on the phase factor."""
    _, f, _ = _nodes(qn, config, rule)
    phase = np.exp(1j * qn.m * rule.phi) / math.sqrt(2 * np.pi)
    dphase = 1j * qn.m * phase
    angular = rule.azimuthal(np.conj(phase) * (-1j) * dphase).real
    return config.l_B**2 * rule.radial(f * f) * angular


def energy_parts(qn: LandauQuantumNumbers, config: PhysicalConfig, rule: QuadratureRule = DEFAULT_RULE) -> tuple[float, float]:
    """(<H_osc>, omega_L <L_can>) with the kinetic term in gradient form.

    H = p^2/(2 m_e) + m_e omega_L^2 r^2 / 2 + omega_L L_can in the symmetric gauge.
    """
    r, f, df = _nodes(qn, config, rule)
    l2 = config.l_B**2
    m_e, w_L = config.m_e, config.omega_L
    # |d_r psi|^2 carries e^{-rho}; strip it for the Laguerre weight
    radial_deriv = df - r / (2 * l2) * f
    density = _phase_density(qn, rule)
    kinetic_r = rule.radial(radial_deriv**2) / (2 * m_e)
    kinetic_phi = qn.m**2 * rule.radial(f * f / (r * r)) / (2 * m_e)
    potential = 0.5 * m_e * w_L**2 * rule.radial(r * r * f * f)
    h_osc = l2 * (kinetic_r + kinetic_phi + potential) * density
    larmor = w_L * expectation_canonical(qn, config, rule)
    return h_osc, larmor


def expectation_energy(qn: LandauQuantumNumbers, config: PhysicalConfig, rule: QuadratureRule = DEFAULT_RULE) -> float:
    h_osc, larmor = energy_parts(qn, config, rule)
    return h_osc + larmor


def expectation_oam(
    qn: LandauQuantumNumbers,
    config: PhysicalConfig,
    spec: OamSpec,
    rule: QuadratureRule = DEFAULT_RULE,
) -> float:
    """Expectation value of one of the six OAMs in the state |n, m>.

    Guiding-center OAMs go through the operator reductions
    L_mech^gc = 2H/omega, L_ps^gc = H/omega and
    L_can^gc = 2H/omega - L_can/2 - (eB/4) r^2.
    """
    eB = config.eB
    l_can = expectation_canonical(qn, config, rule)
    if spec.axis is OamAxis.ORIGIN:
        if spec.kind is OamKind.CANONICAL:
            return l_can
        l_mech = l_can + eB / 2 * expectation_r2(qn, config, rule)
        if spec.kind is OamKind.MECHANICAL:
            return l_mech
        return l_mech - eB / 2 * expectation_r2(qn, config, rule)

    energy = expectation_energy(qn, config, rule)
    if spec.kind is OamKind.MECHANICAL:
        return 2 * energy / config.omega
    if spec.kind is OamKind.PSEUDO:
        return energy / config.omega
    return 2 * energy / config.omega - l_can / 2 - eB / 4 * expectation_r2(qn, config, rule)
