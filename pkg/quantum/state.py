"""
Pure quantum states as dense complex amplitude vectors.

Basis ordering: qubit 0 is the most significant bit of the basis index, so the
ket |q0 q1 q2> = |abc> lives at index 4a + 2b + c.
"""

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from config import STATE_TOLERANCE, UNIT_NORM_TOLERANCE
from errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise DomainError(f"num_qubits must be >= 1, got {self.num_qubits}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 1 << self.num_qubits:
            raise DomainError(
                f"expected {1 << self.num_qubits} amplitudes for {self.num_qubits} qubits, got {amps.size}"
            )
        if not np.all(np.isfinite(amps)):
            raise DomainError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, values):
        """Wrap a power-of-two-length sequence. No normalization is applied."""
        amps = np.asarray(values, dtype=np.complex128).reshape(-1)
        n = amps.size
        if n < 2 or n & (n - 1):
            raise DomainError(f"amplitude count must be a power of two >= 2, got {n}")
        return cls(n.bit_length() - 1, amps)

    @property
    def dimension(self):
        return self.amplitudes.size

    def __len__(self):
        return self.amplitudes.size


@dataclass(frozen=True)
class BlochPoint:
    theta: float
    phi: float


def basis_state(num_qubits, index):
    if num_qubits < 1:
        raise DomainError(f"num_qubits must be >= 1, got {num_qubits}")
    dim = 1 << num_qubits
    if not 0 <= index < dim:
        raise DomainError(f"basis index {index} out of range for {num_qubits} qubits")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(num_qubits, amps)


def state_norm(state):
    return float(np.linalg.norm(state.amplitudes))


def _require_same_width(a, b):
    if a.num_qubits != b.num_qubits:
        raise DomainError(
            f"qubit count mismatch: {a.num_qubits} vs {b.num_qubits}"
        )


def states_close(a, b, tol=STATE_TOLERANCE):
    """Component-wise comparison; sensitive to global phase."""
    _require_same_width(a, b)
    if tol < 0:
        raise DomainError(f"tolerance must be >= 0, got {tol}")
    return bool(np.max(np.abs(a.amplitudes - b.amplitudes)) <= tol)


def fidelity(a, b):
    """|<a|b>|^2, invariant under global phase."""
    _require_same_width(a, b)
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def require_unit_norm(state, tol=UNIT_NORM_TOLERANCE):
    norm = state_norm(state)
    if abs(norm - 1.0) > tol:
        raise InvariantViolation(f"state norm {norm!r} deviates from 1 by more than {tol}")
    return state


def bloch_coordinates(state, pole_tol=1e-12):
    if state.num_qubits != 1:
        raise DomainError(f"Bloch coordinates need a single qubit, got {state.num_qubits}")
    alpha, beta = state.amplitudes
    a_mag, b_mag = abs(alpha), abs(beta)
    theta = 2.0 * math.atan2(b_mag, a_mag)
    if a_mag <= pole_tol or b_mag <= pole_tol:
        # phi is undefined on the poles
        return BlochPoint(theta=theta, phi=0.0)
    # strip the global phase carried by alpha
    relative = beta * cmath.exp(-1j * cmath.phase(alpha))
    phi = cmath.phase(relative) % (2.0 * math.pi)
    if phi >= 2.0 * math.pi:
        phi = 0.0
    return BlochPoint(theta=theta, phi=phi)


def bloch_state(point):
    amps = [
        math.cos(point.theta / 2.0),
        cmath.exp(1j * point.phi) * math.sin(point.theta / 2.0),
    ]
    return StateVector(1, amps)


def basis_label(index, num_qubits):
    return "|" + format(index, f"0{num_qubits}b") + "⟩"


def nonzero_terms(state, eps=STATE_TOLERANCE):
    """[(label, amplitude)] for every amplitude with magnitude above eps, in index order."""
    idx = np.flatnonzero(np.abs(state.amplitudes) > eps)
    return [(basis_label(int(i), state.num_qubits), complex(state.amplitudes[i])) for i in idx]
