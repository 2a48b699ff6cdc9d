"""Operator-algebra route on a truncated two-mode number basis.

Mode ``a`` lowers the Landau index (built from the mechanical momentum),
mode ``b`` lowers the guiding-center radius. A basis ket |n_a, n_b> is the
Landau state with n = n_a and m = n_a - n_b. Ladder truncation corrupts the
top occupation shells, so identities are only asserted on the interior block
n_a + n_b <= cutoff - margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .model import DomainError, LandauQuantumNumbers, OamSpec, PhysicalConfig

HERMITIAN_LABELS = (
    "H", "X", "Y", "x", "y", "Pi_x", "Pi_y", "p_x", "p_y", "r_c2", "R2", "r2",
    "L_can_origin", "L_mech_origin", "L_ps_origin", "L_can_gc", "L_mech_gc", "L_ps_gc",
)


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    label: str
    cutoff: int
    entries: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** 2

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def __matmul__(self, other):
        return self.entries @ _entries(other)


def _entries(op):
    return op.entries if isinstance(op, TruncatedOperator) else op


@dataclass(frozen=True)
class FockBasisState:
    n_a: int
    n_b: int

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise DomainError(f"occupations must be >= 0, got ({self.n_a}, {self.n_b})")

    @classmethod
    def from_quantum_numbers(cls, qn: LandauQuantumNumbers) -> "FockBasisState":
        return cls(qn.n, qn.n - qn.m)

    @property
    def quantum_numbers(self) -> LandauQuantumNumbers:
        return LandauQuantumNumbers(self.n_a, self.n_a - self.n_b)

    def index(self, cutoff: int) -> int:
        return self.n_a * (cutoff + 1) + self.n_b


class OperatorSet(Mapping):
    """Immutable label -> TruncatedOperator mapping for one (config, cutoff)."""

    def __init__(self, config: PhysicalConfig, cutoff: int, ops: dict[str, TruncatedOperator]):
        self.config = config
        self.cutoff = cutoff
        self._ops = dict(ops)

    def __getitem__(self, label: str) -> TruncatedOperator:
        return self._ops[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self._ops)

    def __len__(self) -> int:
        return len(self._ops)

    def matrix(self, label: str) -> np.ndarray:
        return self._ops[label].entries

    def oam(self, spec: OamSpec) -> TruncatedOperator:
        return self._ops[spec.label]

    def replace(self, label: str, entries: np.ndarray) -> "OperatorSet":
        """Copy with one operator swapped out (used for fault injection)."""
        ops = dict(self._ops)
        ops[label] = TruncatedOperator(label, self.cutoff, np.array(entries, dtype=complex))
        return OperatorSet(self.config, self.cutoff, ops)


def perturb(ops: OperatorSet, label: str, row: int, col: int, delta: float) -> OperatorSet:
    """Add ``delta`` to a single matrix entry of one operator."""
    entries = ops.matrix(label).copy()
    entries[row, col] += delta
    return ops.replace(label, entries)


def _lowering(cutoff: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=1).astype(complex)


def build_operator_set(config: PhysicalConfig, cutoff: int = 20) -> OperatorSet:
    if cutoff < 4:
        raise DomainError(f"cutoff must be >= 4, got {cutoff}")
    eye = np.eye(cutoff + 1, dtype=complex)
    low = _lowering(cutoff)
    a = np.kron(low, eye)
    b = np.kron(eye, low)
    ad, bd = a.conj().T, b.conj().T
    l_B, eB, m_e = config.l_B, config.eB, config.m_e
    s2 = math.sqrt(2)

    # a = (l_B/sqrt2)(Pi_x - i Pi_y), b = (X + iY)/(sqrt2 l_B)
    pi_x = (a + ad) / (s2 * l_B)
    pi_y = 1j * (a - ad) / (s2 * l_B)
    X = l_B * (b + bd) / s2
    Y = -1j * l_B * (b - bd) / s2
    x = X + pi_y / eB
    y = Y - pi_x / eB
    p_x = pi_x + eB / 2 * y
    p_y = pi_y - eB / 2 * x

    H = (pi_x @ pi_x + pi_y @ pi_y) / (2 * m_e)
    dx, dy = x - X, y - Y
    r_c2 = dx @ dx + dy @ dy
    R2 = X @ X + Y @ Y
    r2 = x @ x + y @ y

    L_can = x @ p_y - y @ p_x
    L_mech = x @ pi_y - y @ pi_x
    L_ps = L_mech - eB / 2 * r2
    L_can_gc = dx @ p_y - dy @ p_x
    L_mech_gc = dx @ pi_y - dy @ pi_x
    L_ps_gc = L_mech_gc - eB / 2 * r_c2

    named = {
        "a": a, "b": b, "Pi_x": pi_x, "Pi_y": pi_y, "X": X, "Y": Y,
        "x": x, "y": y, "p_x": p_x, "p_y": p_y, "H": H,
        "r_c2": r_c2, "R2": R2, "r2": r2,
        "L_can_origin": L_can, "L_mech_origin": L_mech, "L_ps_origin": L_ps,
        "L_can_gc": L_can_gc, "L_mech_gc": L_mech_gc, "L_ps_gc": L_ps_gc,
    }
    ops = {k: TruncatedOperator(k, cutoff, v) for k, v in named.items()}
    return OperatorSet(config, cutoff, ops)


def interior_states(cutoff: int, margin: int) -> list[FockBasisState]:
    if not 0 < margin < cutoff:
        raise DomainError(f"need 0 < margin < cutoff, got margin={margin}, cutoff={cutoff}")
    top = cutoff - margin
    return [FockBasisState(na, nb) for na in range(top + 1) for nb in range(top + 1 - na)]


def interior_projector(cutoff: int, margin: int) -> np.ndarray:
    """Diagonal projector onto kets with n_a + n_b <= cutoff - margin."""
    P = np.zeros(((cutoff + 1) ** 2, (cutoff + 1) ** 2))
    for state in interior_states(cutoff, margin):
        i = state.index(cutoff)
        P[i, i] = 1.0
    return P


def in_interior(state: FockBasisState, cutoff: int, margin: int) -> bool:
    return state.n_a <= cutoff and state.n_b <= cutoff and state.n_a + state.n_b <= cutoff - margin


def interior_residual(M: np.ndarray, P: np.ndarray) -> float:
    """max-norm of P M P for a diagonal projector P."""
    idx = np.flatnonzero(np.diag(P))
    return float(np.max(np.abs(M[np.ix_(idx, idx)])))


def commutator(A, B) -> np.ndarray:
    A, B = _entries(A), _entries(B)
    return A @ B - B @ A


def commutation_checks(ops: OperatorSet, P: np.ndarray) -> dict[str, float]:
    """Canonical ladder and guiding-center commutators."""
    eye = np.eye(P.shape[0])
    a, b = ops.matrix("a"), ops.matrix("b")
    l2 = ops.config.l_B**2
    return {
        "[a,a^dag]-1": interior_residual(commutator(a, a.conj().T) - eye, P),
        "[b,b^dag]-1": interior_residual(commutator(b, b.conj().T) - eye, P),
        "[a,b]": interior_residual(commutator(a, b), P),
        "[a,b^dag]": interior_residual(commutator(a, b.conj().T), P),
        "[X,Y]-i*l_B^2": interior_residual(commutator(ops["X"], ops["Y"]) - 1j * l2 * eye, P),
        "[Pi_x,Pi_y]+i*eB": interior_residual(
            commutator(ops["Pi_x"], ops["Pi_y"]) + 1j * ops.config.eB * eye, P
        ),
    }


def conservation_checks(ops: OperatorSet, P: np.ndarray) -> dict[str, float]:
    """Interior residuals of commutators with H, in units of omega."""
    H = ops["H"]
    w = ops.config.omega
    names = {
        "[X,H]": "X", "[Y,H]": "Y", "[R^2,H]": "R2",
        "[L_ps_origin,H]": "L_ps_origin", "[L_can_origin,H]": "L_can_origin",
        "[L_mech_gc,H]": "L_mech_gc", "[L_ps_gc,H]": "L_ps_gc",
    }
    return {k: interior_residual(commutator(ops[v], H), P) / w for k, v in names.items()}


def identity_checks(ops: OperatorSet, P: np.ndarray, config: PhysicalConfig | None = None) -> dict[str, float]:
    config = config or ops.config
    m = ops.matrix
    w, eB, l2 = config.omega, config.eB, config.l_B**2
    eye = np.eye(P.shape[0])
    a, b = m("a"), m("b")
    n_a, n_b = a.conj().T @ a, b.conj().T @ b
    H = m("H")
    dx, dy = m("x") - m("X"), m("y") - m("Y")
    checks = {
        "L_mech_gc-2H/omega": m("L_mech_gc") - 2 / w * H,
        "L_ps_gc-H/omega": m("L_ps_gc") - H / w,
        "L_can_gc-(2H/omega-L_can/2-eB*r^2/4)": m("L_can_gc")
        - (2 / w * H - m("L_can_origin") / 2 - eB / 4 * m("r2")),
        "Johnson-Lippmann": m("L_can_origin") - (m("r_c2") - m("R2")) / (2 * l2),
        "r_c^2-l_B^2(2a^dag a+1)": m("r_c2") - l2 * (2 * n_a + eye),
        "R^2-l_B^2(2b^dag b+1)": m("R2") - l2 * (2 * n_b + eye),
        "L_ps_origin-(L_mech_origin-eB*r^2/2)": m("L_ps_origin")
        - (m("L_mech_origin") - eB / 2 * m("r2")),
        "(x-X)Pi_y-(y-Y)Pi_x-Pi^2/eB": dx @ m("Pi_y") - dy @ m("Pi_x")
        - (m("Pi_x") @ m("Pi_x") + m("Pi_y") @ m("Pi_y")) / eB,
    }
    return {k: interior_residual(v, P) for k, v in checks.items()}


def hermiticity_checks(ops: OperatorSet) -> dict[str, float]:
    return {label: ops[label].hermiticity_residual() for label in HERMITIAN_LABELS}


def expectation_fock(qn: LandauQuantumNumbers, ops: OperatorSet, what: OamSpec | str, margin: int = 4) -> float:
    """<n_a, n_b| M |n_a, n_b> for an OAM spec or an operator label."""
    state = FockBasisState.from_quantum_numbers(qn)
    if not in_interior(state, ops.cutoff, margin):
        raise DomainError(
            f"state (n={qn.n}, m={qn.m}) -> |{state.n_a},{state.n_b}> lies outside the "
            f"interior block of cutoff={ops.cutoff}, margin={margin}"
        )
    label = what.label if isinstance(what, OamSpec) else what
    i = state.index(ops.cutoff)
    return float(ops.matrix(label)[i, i].real)


def interior_spectrum(ops: OperatorSet, margin: int) -> np.ndarray:
    """Sorted eigenvalues of H restricted to the interior block."""
    idx = [s.index(ops.cutoff) for s in interior_states(ops.cutoff, margin)]
    block = ops.matrix("H")[np.ix_(idx, idx)]
    return np.linalg.eigvalsh(block)


def level_multiplicity(cutoff: int, margin: int, n: int) -> int:
    """Number of interior kets in Landau level n."""
    return max(cutoff - margin - n + 1, 0)


def _sign(value: float, atol: float) -> int:
    return 0 if abs(value) <= atol else (1 if value > 0 else -1)


def sign_correlation(l_can: float, r_c2: float, R2: float, atol: float = 1e-8) -> bool:
    """True iff sign <L_can> == sign(<r_c^2> - <R^2>), with |x| <= atol counted as 0."""
    return _sign(l_can, atol) == _sign(r_c2 - R2, atol)
