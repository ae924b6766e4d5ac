"""
Hadamard edge detection over an amplitude-encoded frame.

The pipeline for coefficients c_0..c_{P-1}:

    cyclic_double        (c_0, c_1, c_1, c_2, ..., c_{P-1}, c_{P-1}, c_0)
    pairwise_hadamard    each adjacent pair (u, v) -> ((u+v), (u-v)) / sqrt(2)
    project_differences  keep the odd slots: ((c_j - c_{j+1 mod P}) / sqrt(2))_j

The Hadamard acts on the pair index (the lowest-order qubit of the doubled
register), which is what reproduces the pairwise sums and differences. The
doubling is not unitary (it scales the norm by sqrt(2)) and runs as a classical
vector step ahead of the unitary stage.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from config import DEFAULT_DROP_WRAPAROUND, DEFAULT_EPSILON
from errors import DomainError, InvariantViolation
from quantum.gates import apply_unitary, standard_gate
from quantum.state import StateVector

logger = logging.getLogger(__name__)

_HADAMARD = standard_gate("H").matrix.real
_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True, eq=False)
class EdgeVector:
    coefficients: np.ndarray
    frame_time: int
    meta: object

    def __post_init__(self):
        coeffs = np.array(self.coefficients, dtype=np.float64).reshape(-1)
        if coeffs.size != self.meta.padded_length:
            raise DomainError(
                f"edge vector has {coeffs.size} entries, encoding expects {self.meta.padded_length}"
            )
        # cyclic differences telescope to zero
        drift = abs(float(coeffs.sum()))
        if drift > 1e-9 * max(1.0, float(np.abs(coeffs).sum())):
            raise InvariantViolation(f"cyclic differences sum to {drift!r}, not 0")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return self.coefficients.size


@dataclass(frozen=True, eq=False)
class BoundaryMask:
    bits: np.ndarray
    epsilon: float
    wraparound_removed: bool

    def __post_init__(self):
        bits = np.array(self.bits, dtype=bool).reshape(-1)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return self.bits.size


def _real_vector(coeffs):
    if isinstance(coeffs, StateVector):
        coeffs = coeffs.amplitudes
    arr = np.asarray(coeffs)
    if np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise DomainError("edge detection takes real coefficients")
        arr = arr.real
    return np.asarray(arr, dtype=np.float64).reshape(-1)


def _require_even(values, what):
    if values.size == 0 or values.size % 2:
        raise DomainError(f"{what} needs a non-empty even-length vector, got length {values.size}")


def cyclic_double(coeffs):
    c = np.asarray(coeffs).reshape(-1)
    if c.size < 2:
        raise DomainError(f"cyclic doubling needs P >= 2 coefficients, got {c.size}")
    doubled = np.empty(2 * c.size, dtype=np.result_type(c.dtype, np.float64))
    doubled[0::2] = c
    doubled[1::2] = np.roll(c, -1)
    return doubled


def pairwise_hadamard(doubled):
    d = np.asarray(doubled).reshape(-1)
    _require_even(d, "pairwise Hadamard")
    return (d.reshape(-1, 2) @ _HADAMARD.T).reshape(-1)


def project_differences(transformed):
    t = np.asarray(transformed).reshape(-1)
    _require_even(t, "difference projection")
    return t[1::2].copy()


def edge_detect(coeffs, meta, frame_time=0):
    c = _real_vector(coeffs)
    if c.size != meta.padded_length:
        raise DomainError(
            f"got {c.size} coefficients, encoding expects {meta.padded_length}"
        )
    edges = project_differences(pairwise_hadamard(cyclic_double(c)))
    return EdgeVector(edges, frame_time, meta)


def transformed_state(state):
    """
    The doubled frame as a (nu+1)-qubit state, evolved by H on its lowest-order qubit.

    Equals pairwise_hadamard(cyclic_double(c)) / sqrt(2); the odd amplitudes
    hold the scaled differences.
    """
    doubled = StateVector(state.num_qubits + 1, cyclic_double(state.amplitudes) * _SQRT_HALF)
    return apply_unitary(doubled, standard_gate("H"), [state.num_qubits])


def seam_positions(dims, padded_length):
    """
    True at j where c_j and c_{j+1 mod P} are not neighbouring grid cells.

    That covers column and slab ends of the flat order, every pair touching
    the zero padding, and the closing c_{P-1} - c_0 term.
    """
    dims = tuple(int(d) for d in dims)
    pixels = math.prod(dims)
    if padded_length < pixels:
        raise DomainError(f"padded length {padded_length} shorter than {pixels} pixels")
    seams = np.ones(padded_length, dtype=bool)
    if pixels > 1:
        here = np.arange(pixels - 1)
        a = np.unravel_index(here, dims, order="F")
        b = np.unravel_index(here + 1, dims, order="F")
        distance = sum(np.abs(x - y) for x, y in zip(a, b))
        seams[:pixels - 1] = distance != 1
    return seams


def boundary_mask(edges, epsilon=DEFAULT_EPSILON, drop_wraparound=DEFAULT_DROP_WRAPAROUND):
    if epsilon < 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    bits = np.abs(edges.coefficients) > epsilon
    if drop_wraparound:
        bits &= ~seam_positions(edges.meta.original_dims, edges.meta.padded_length)
    return BoundaryMask(bits, float(epsilon), bool(drop_wraparound))


def boundary_positions(mask):
    return [int(j) for j in np.flatnonzero(mask.bits)]


def denormalize(edges):
    """Differences in pixel units: coefficients times the frame's norm factor."""
    return EdgeVector(edges.coefficients * edges.meta.norm_factor, edges.frame_time, edges.meta)
