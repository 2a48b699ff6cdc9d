"""Canonical, mechanical and pseudo orbital angular momenta in Landau levels.

Three independent routes to the same numbers:

* :mod:`landau_oam.wavefunction` - quadrature over symmetric-gauge eigenfunctions
* :mod:`landau_oam.fock` - truncated two-mode operator matrices
* :mod:`landau_oam.classical` - closed-form and RK4 cyclotron orbits
"""

from .model import (
    ALL_OAM_SPECS,
    DEFAULT_CONFIG,
    DomainError,
    LandauQuantumNumbers,
    OamAxis,
    OamKind,
    OamSpec,
    PhysicalConfig,
    landau_energy,
    make_config,
    state_grid,
    table1_value,
    validate_quantum_numbers,
)

__version__ = "0.1.0"
