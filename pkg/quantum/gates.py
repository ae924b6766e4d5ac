"""
Gate catalog, tensor composition and gate application.

Gates act on a state reshaped to one axis per qubit, so a k-qubit gate on a
v-qubit register costs O(2^v * 2^k) instead of materializing the 2^v x 2^v
operator. A gate's matrix index uses the same most-significant-first
convention as the register: targets[0] is the gate's leading qubit, which for
CNOT and CZ is the control.
"""

import logging
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from config import UNITARY_TOLERANCE
from errors import DomainError
from quantum.state import StateVector

logger = logging.getLogger(__name__)

_SQRT_HALF = math.sqrt(0.5)

_CATALOG = {
    "I": [[1, 0], [0, 1]],
    "H": [[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]],
    "X": [[0, 1], [1, 0]],
    "Y": [[0, -1j], [1j, 0]],
    "Z": [[1, 0], [0, -1]],
    "T": [[1, 0], [0, np.exp(1j * math.pi / 4.0)]],
    "CNOT": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    "CZ": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
}

GATE_NAMES = tuple(_CATALOG)


def is_unitary(matrix, tol=UNITARY_TOLERANCE):
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    product = m.conj().T @ m
    return bool(np.max(np.abs(product - np.eye(m.shape[0]))) <= tol)


@dataclass(frozen=True, eq=False)
class Gate:
    arity: int
    matrix: np.ndarray
    name: str = ""

    def __post_init__(self):
        if self.arity < 1:
            raise DomainError(f"gate arity must be >= 1, got {self.arity}")
        m = np.array(self.matrix, dtype=np.complex128)
        dim = 1 << self.arity
        if m.shape != (dim, dim):
            raise DomainError(f"arity-{self.arity} gate needs a {dim}x{dim} matrix, got {m.shape}")
        if not is_unitary(m):
            raise DomainError(f"matrix for gate {self.name or '?'} is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dimension(self):
        return self.matrix.shape[0]


def standard_gate(name):
    key = str(name).strip().upper()
    if key not in _CATALOG:
        raise DomainError(f"unknown gate {name!r}; expected one of {', '.join(GATE_NAMES)}")
    matrix = np.asarray(_CATALOG[key], dtype=np.complex128)
    arity = matrix.shape[0].bit_length() - 1
    return Gate(arity, matrix, name=key)


def tensor(a, b):
    name = f"{a.name}⊗{b.name}" if a.name and b.name else ""
    return Gate(a.arity + b.arity, np.kron(a.matrix, b.matrix), name=name)


def tensor_all(gates):
    gates = list(gates)
    if not gates:
        raise DomainError("tensor_all needs at least one gate")
    return reduce(tensor, gates)


def _check_targets(targets, arity, num_qubits):
    targets = [int(t) for t in targets]
    if len(targets) != arity:
        raise DomainError(f"gate of arity {arity} given {len(targets)} targets")
    if len(set(targets)) != len(targets):
        raise DomainError(f"targets must be distinct, got {targets}")
    for t in targets:
        if not 0 <= t < num_qubits:
            raise DomainError(f"target qubit {t} out of range for a {num_qubits}-qubit register")
    return targets


def apply_unitary(state, gate, targets):
    """Return gate applied to the listed qubits of state; identity elsewhere."""
    n = state.num_qubits
    targets = _check_targets(targets, gate.arity, n)
    k = gate.arity
    psi = state.amplitudes.reshape((2,) * n)
    op = gate.matrix.reshape((2,) * (2 * k))
    out = np.tensordot(op, psi, axes=(list(range(k, 2 * k)), targets))
    out = np.moveaxis(out, list(range(k)), targets)
    return StateVector(n, out.reshape(-1))


def apply_permutation(state, permutation):
    """Relabel basis states: amplitude at index i moves to index permutation[i]."""
    perm = np.asarray(permutation, dtype=np.int64).reshape(-1)
    dim = state.dimension
    if perm.size != dim:
        raise DomainError(f"permutation of length {perm.size} for a state of dimension {dim}")
    if not np.array_equal(np.sort(perm), np.arange(dim)):
        raise DomainError("index map is not a permutation")
    out = np.empty(dim, dtype=np.complex128)
    out[perm] = state.amplitudes
    return StateVector(state.num_qubits, out)


def permutation_matrix(permutation):
    """Dense 0/1 matrix P with P[permutation[i], i] = 1."""
    perm = np.asarray(permutation, dtype=np.int64).reshape(-1)
    dim = perm.size
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    matrix[perm, np.arange(dim)] = 1.0
    return matrix
