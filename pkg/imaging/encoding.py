"""
Amplitude encoding of volumes.

c_k = v_k / sqrt(sum v^2) for k < M*L*N and c_k = 0 on the zero padding up to
the next power of two. The register always has at least one qubit.
"""

import logging
from dataclasses import dataclass

import numpy as np

from errors import DegenerateInputError, DomainError
from imaging.volume import Volume, flatten
from quantum.state import StateVector, require_unit_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EncodingMeta:
    original_dims: tuple
    norm_factor: float
    num_qubits: int
    padded_length: int

    @property
    def pixel_count(self):
        m, l, n = self.original_dims
        return m * l * n


def register_width(pixel_count):
    """Smallest nu >= 1 with 2^nu >= pixel_count."""
    if pixel_count < 1:
        raise DomainError(f"pixel count must be positive, got {pixel_count}")
    return max(1, (pixel_count - 1).bit_length())


def amplitude_encode(volume):
    flat = flatten(volume)
    norm_factor = float(np.linalg.norm(flat))
    if norm_factor == 0.0:
        raise DegenerateInputError("all pixel values are zero; normalization is undefined",
                                   time_stamp=volume.time_stamp)
    nu = register_width(flat.size)
    padded = np.zeros(1 << nu, dtype=np.complex128)
    padded[:flat.size] = flat / norm_factor
    meta = EncodingMeta(
        original_dims=volume.dims,
        norm_factor=norm_factor,
        num_qubits=nu,
        padded_length=1 << nu,
    )
    logger.debug("Encoded s=%d dims=%s into %d qubits (norm %.6g)",
                 volume.time_stamp, volume.dims, nu, norm_factor)
    return require_unit_norm(StateVector(nu, padded)), meta


def decode(state, meta, time_stamp=0):
    """Undo amplitude_encode: rescale, drop the padding, reshape to the grid."""
    if state.dimension != meta.padded_length:
        raise DomainError(
            f"state dimension {state.dimension} does not match padded length {meta.padded_length}"
        )
    flat = state.amplitudes[:meta.pixel_count].real * meta.norm_factor
    return Volume.from_flat(meta.original_dims, flat, time_stamp)
