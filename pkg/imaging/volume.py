"""
Time-stamped 3D pixel volumes and their on-disk formats.

Flat order follows the column-reading rule: fix the right-most coordinate and
walk down each column from left to right, so v[i, j, k] (0-based) sits at
flat position i + j*M + k*M*L. That is numpy's Fortran order.

Text format:   line 1 "M L N s", then M*L*N whitespace-separated reals in flat order.
Binary format: four little-endian uint32 (M, L, N, s), then M*L*N little-endian float64.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from config import REPORT_FLOAT_FORMAT
from errors import DomainError, ParseError

logger = logging.getLogger(__name__)

_HEADER = np.dtype("<u4")
_PIXEL = np.dtype("<f8")
_HEADER_BYTES = 4 * _HEADER.itemsize


@dataclass(frozen=True, eq=False)
class Volume:
    dims: tuple
    grid: np.ndarray
    time_stamp: int = 0

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 3 or any(d < 1 for d in dims):
            raise DomainError(f"volume dims must be three positive counts, got {self.dims}")
        grid = np.array(self.grid, dtype=np.float64)
        if grid.shape != dims:
            raise DomainError(f"grid shape {grid.shape} does not match dims {dims}")
        if not np.all(np.isfinite(grid)):
            raise DomainError("pixel values must be finite")
        if np.any(grid < 0):
            raise DomainError("pixel values must be non-negative")
        grid.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "time_stamp", int(self.time_stamp))

    @classmethod
    def from_flat(cls, dims, values, time_stamp=0):
        """Build a volume from values already in flat (column-reading) order."""
        dims = tuple(int(d) for d in dims)
        flat = np.asarray(values, dtype=np.float64).reshape(-1)
        if len(dims) != 3 or flat.size != math.prod(dims):
            raise DomainError(f"{flat.size} values cannot fill a volume of dims {dims}")
        return cls(dims, flat.reshape(dims, order="F"), time_stamp)

    @property
    def size(self):
        return self.grid.size

    @property
    def values(self):
        return flatten(self)


def flatten(volume):
    return volume.grid.ravel(order="F")


def flat_index(i, j, k, dims):
    """0-based (i, j, k) to its flat position."""
    m, l, _ = dims
    return i + j * m + k * m * l


# ── Text format ───────────────────────────────────────────────────────────────

def _parse_header(text, line_no, path):
    parts = text.split()
    if len(parts) != 4:
        raise ParseError(f"header must be 'M L N s', got {text!r}", path=path, line=line_no)
    try:
        m, l, n, s = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"header must hold four integers, got {text!r}", path=path, line=line_no)
    if min(m, l, n) < 1:
        raise ParseError(f"dims must be positive, got {m}x{l}x{n}", path=path, line=line_no)
    return (m, l, n), s


def parse_volume_text(lines, path=None):
    numbered = list(enumerate(lines, start=1))
    content = [(n, line) for n, line in numbered if line.strip()]
    if not content:
        raise ParseError("volume file is empty", path=path, line=1)

    header_line, header = content[0]
    dims, s = _parse_header(header, header_line, path)
    expected = math.prod(dims)

    values = []
    last_line = header_line
    for line_no, line in content[1:]:
        last_line = line_no
        for token in line.split():
            if len(values) == expected:
                raise ParseError(f"more than {expected} pixel values", path=path, line=line_no)
            try:
                value = float(token)
            except ValueError:
                raise ParseError(f"pixel value must be a real number, got {token!r}", path=path, line=line_no)
            if not math.isfinite(value) or value < 0:
                raise ParseError(f"pixel value must be finite and >= 0, got {token!r}", path=path, line=line_no)
            values.append(value)
    if len(values) != expected:
        raise ParseError(
            f"expected {expected} pixel values for {dims[0]}x{dims[1]}x{dims[2]}, found {len(values)}",
            path=path, line=last_line,
        )
    return Volume.from_flat(dims, values, s)


def read_volume_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as e:
        raise ParseError(f"cannot read volume: {e}", path=path)
    return parse_volume_text(lines, path=path)


def write_volume_text(volume, path):
    m, l, n = volume.dims
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{m} {l} {n} {volume.time_stamp}\n")
        for value in flatten(volume):
            fh.write(REPORT_FLOAT_FORMAT % value + "\n")


# ── Binary format ─────────────────────────────────────────────────────────────

def parse_volume_binary(data, path=None):
    if len(data) < _HEADER_BYTES:
        raise ParseError(f"binary volume shorter than its {_HEADER_BYTES}-byte header", path=path, line=1)
    m, l, n, s = (int(v) for v in np.frombuffer(data[:_HEADER_BYTES], dtype=_HEADER))
    if min(m, l, n) < 1:
        raise ParseError(f"dims must be positive, got {m}x{l}x{n}", path=path, line=1)
    expected = _HEADER_BYTES + m * l * n * _PIXEL.itemsize
    if len(data) != expected:
        raise ParseError(
            f"binary volume {m}x{l}x{n} needs {expected} bytes, file has {len(data)}", path=path, line=1
        )
    values = np.frombuffer(data[_HEADER_BYTES:], dtype=_PIXEL)
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise ParseError("pixel values must be finite and >= 0", path=path, line=1)
    return Volume.from_flat((m, l, n), values, s)


def read_volume_binary(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read volume: {e}", path=path)
    return parse_volume_binary(data, path=path)


def write_volume_binary(volume, path):
    if not 0 <= volume.time_stamp <= 0xFFFFFFFF:
        raise DomainError(f"binary header stores s as uint32, got s={volume.time_stamp}")
    header = np.asarray((*volume.dims, volume.time_stamp), dtype=_HEADER)
    with open(path, "wb") as fh:
        fh.write(header.tobytes())
        fh.write(np.ascontiguousarray(flatten(volume), dtype=_PIXEL).tobytes())


def read_volume(path, binary=False):
    volume = read_volume_binary(path) if binary else read_volume_text(path)
    logger.debug("Read %s volume %s dims=%s s=%d", "binary" if binary else "text",
                 path, volume.dims, volume.time_stamp)
    return volume
