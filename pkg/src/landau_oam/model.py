"""Physical parameters, Landau quantum numbers and the OAM taxonomy.

Natural units (hbar = c = 1). The electron carries charge -e with e > 0 and
the field points along +z.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


@dataclass(frozen=True)
class PhysicalConfig:
    """Field strength ``B``, charge magnitude ``e`` and mass ``m_e``."""

    B: float = 1.0
    e: float = 1.0
    m_e: float = 1.0

    def __post_init__(self):
        for name in ("B", "e", "m_e"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be finite and > 0, got {value!r}")

    @property
    def eB(self) -> float:
        return self.e * self.B

    @property
    def omega(self) -> float:
        """Cyclotron frequency eB/m_e."""
        return self.e * self.B / self.m_e

    @property
    def omega_L(self) -> float:
        """Larmor frequency, half the cyclotron frequency."""
        return self.omega / 2

    @property
    def l_B(self) -> float:
        """Magnetic length 1/sqrt(eB)."""
        return 1.0 / math.sqrt(self.e * self.B)


def make_config(B: float, e: float, m_e: float) -> PhysicalConfig:
    return PhysicalConfig(float(B), float(e), float(m_e))


DEFAULT_CONFIG = PhysicalConfig()


def landau_energy(config: PhysicalConfig, n: int) -> float:
    """Energy of the n-th Landau level, omega * (n + 1/2)."""
    if n < 0:
        raise DomainError(f"Landau index n must be >= 0, got {n}")
    return config.omega * (n + 0.5)


@dataclass(frozen=True)
class LandauQuantumNumbers:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m > self.n:
            raise DomainError(
                f"invalid Landau quantum numbers (n={self.n}, m={self.m}): "
                "need n >= 0 and m <= n"
            )


def validate_quantum_numbers(n: int, m: int) -> LandauQuantumNumbers:
    return LandauQuantumNumbers(int(n), int(m))


def state_grid(n_max: int = 5, m_min: int = -5) -> list[LandauQuantumNumbers]:
    """All (n, m) with 0 <= n <= n_max and m_min <= m <= n, in row order."""
    return [
        LandauQuantumNumbers(n, m)
        for n in range(n_max + 1)
        for m in range(m_min, n + 1)
    ]


class OamKind(enum.Enum):
    CANONICAL = "canonical"
    MECHANICAL = "mechanical"
    PSEUDO = "pseudo"


class OamAxis(enum.Enum):
    ORIGIN = "origin"
    GUIDING_CENTER = "gc"


@dataclass(frozen=True)
class OamSpec:
    kind: OamKind
    axis: OamAxis

    @property
    def label(self) -> str:
        short = {OamKind.CANONICAL: "can", OamKind.MECHANICAL: "mech", OamKind.PSEUDO: "ps"}
        return f"L_{short[self.kind]}_{self.axis.value}"


# Column order used in reports: origin row first, canonical/mechanical/pseudo.
ALL_OAM_SPECS = tuple(OamSpec(k, a) for a in OamAxis for k in OamKind)


def table1_value(qn: LandauQuantumNumbers, spec: OamSpec) -> float:
    """Closed-form expectation value of an OAM in the state |n, m>."""
    n, m = qn.n, qn.m
    if spec.axis is OamAxis.ORIGIN:
        return 2 * n + 1.0 if spec.kind is OamKind.MECHANICAL else float(m)
    return 2 * n + 1.0 if spec.kind is OamKind.MECHANICAL else (2 * n + 1) / 2
