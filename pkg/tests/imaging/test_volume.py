import itertools

import numpy as np
import pytest

from errors import DomainError, ParseError
from imaging.volume import (
    Volume, flat_index, flatten, parse_volume_binary, parse_volume_text, read_volume,
    write_volume_binary,
)


def _grid(dims, entries):
    grid = np.zeros(dims)
    for (i, j, k), value in entries.items():
        grid[i, j, k] = value
    return grid


# ── flatten ───────────────────────────────────────────────────────────────────

def test_flatten_walks_columns_first():
    grid = _grid((2, 2, 1), {(0, 0, 0): 1.0, (1, 0, 0): 2.0, (0, 1, 0): 3.0, (1, 1, 0): 4.0})
    assert list(flatten(Volume((2, 2, 1), grid))) == [1.0, 2.0, 3.0, 4.0]


def test_flatten_single_pixel():
    assert list(flatten(Volume((1, 1, 1), [[[7.5]]]))) == [7.5]


def test_flatten_crosses_slabs_last():
    grid = _grid((2, 1, 2), {(0, 0, 0): 1.0, (1, 0, 0): 2.0, (0, 0, 1): 3.0, (1, 0, 1): 4.0})
    assert list(flatten(Volume((2, 1, 2), grid))) == [1.0, 2.0, 3.0, 4.0]


@pytest.mark.parametrize("dims", list(itertools.product(range(1, 5), repeat=3)))
def test_flat_index_is_a_bijection(dims):
    m, l, n = dims
    seen = {flat_index(i, j, k, dims) for i in range(m) for j in range(l) for k in range(n)}
    assert seen == set(range(m * l * n))


def test_flat_index_agrees_with_flatten(rng):
    dims = (3, 4, 2)
    volume = Volume(dims, rng.random(dims))
    flat = flatten(volume)
    for i, j, k in itertools.product(range(3), range(4), range(2)):
        assert flat[flat_index(i, j, k, dims)] == volume.grid[i, j, k]


# ── Volume ────────────────────────────────────────────────────────────────────

def test_from_flat_inverts_flatten(rng):
    values = rng.random(24)
    volume = Volume.from_flat((2, 3, 4), values, time_stamp=5)
    np.testing.assert_array_equal(flatten(volume), values)
    assert volume.time_stamp == 5


def test_volume_rejects_negative_pixels():
    with pytest.raises(DomainError, match="non-negative"):
        Volume.from_flat((2, 1, 1), [1.0, -0.5])


def test_volume_rejects_non_finite_pixels():
    with pytest.raises(DomainError, match="finite"):
        Volume.from_flat((2, 1, 1), [1.0, float("nan")])


def test_volume_rejects_shape_mismatch():
    with pytest.raises(DomainError):
        Volume((2, 2, 1), np.zeros((2, 1, 1)))


def test_volume_grid_is_read_only():
    volume = Volume.from_flat((2, 1, 1), [1.0, 2.0])
    with pytest.raises(ValueError):
        volume.grid[0, 0, 0] = 3.0


# ── Text format ───────────────────────────────────────────────────────────────

def test_parse_text_volume():
    volume = parse_volume_text(["2 2 1 7\n", "1 2\n", "\n", "3 4\n"])
    assert volume.dims == (2, 2, 1)
    assert volume.time_stamp == 7
    assert volume.grid[0, 1, 0] == 3.0


def test_parse_text_too_few_values():
    with pytest.raises(ParseError, match="expected 4 pixel values") as info:
        parse_volume_text(["2 2 1 0", "1 2", "3"])
    assert info.value.line == 3


def test_parse_text_too_many_values():
    with pytest.raises(ParseError, match="more than 2") as info:
        parse_volume_text(["2 1 1 0", "1", "2 3"])
    assert info.value.line == 3


def test_parse_text_bad_token():
    with pytest.raises(ParseError, match="real number") as info:
        parse_volume_text(["2 1 1 0", "1 x"])
    assert info.value.line == 2


def test_parse_text_negative_value():
    with pytest.raises(ParseError, match=">= 0"):
        parse_volume_text(["2 1 1 0", "1 -1"])


def test_parse_text_bad_header():
    with pytest.raises(ParseError, match="M L N s"):
        parse_volume_text(["2 1 1"])


def test_parse_text_empty():
    with pytest.raises(ParseError, match="empty"):
        parse_volume_text([])


def test_text_file_round_trip(volume_file, rng):
    values = rng.random(12) * 100
    path = volume_file((3, 2, 2), values, time_stamp=4)
    volume = read_volume(path)
    np.testing.assert_array_equal(flatten(volume), values)
    assert volume.time_stamp == 4


def test_read_missing_volume(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_volume(str(tmp_path / "missing.txt"))


# ── Binary format ─────────────────────────────────────────────────────────────

def test_binary_file_round_trip(volume_file, rng):
    values = rng.random(6)
    path = volume_file((1, 2, 3), values, time_stamp=9, binary=True)
    volume = read_volume(path, binary=True)
    assert volume.dims == (1, 2, 3)
    assert volume.time_stamp == 9
    np.testing.assert_array_equal(flatten(volume), values)


def test_binary_truncated_payload(tmp_path):
    path = tmp_path / "frame.bin"
    write_volume_binary(Volume.from_flat((2, 1, 1), [1.0, 2.0]), path)
    data = path.read_bytes()[:-4]
    with pytest.raises(ParseError, match="needs 32 bytes"):
        parse_volume_binary(data)


def test_binary_short_header():
    with pytest.raises(ParseError, match="header"):
        parse_volume_binary(b"\x01\x00")


def test_binary_writer_rejects_negative_time_stamp(tmp_path):
    volume = Volume.from_flat((2, 1, 1), [1.0, 2.0], time_stamp=-3)
    with pytest.raises(DomainError, match="uint32"):
        write_volume_binary(volume, tmp_path / "frame.bin")
    assert not (tmp_path / "frame.bin").exists()


def test_text_round_trip_keeps_negative_time_stamp(volume_file):
    volume = read_volume(volume_file((2, 1, 1), [1.0, 2.0], time_stamp=-3))
    assert volume.time_stamp == -3
