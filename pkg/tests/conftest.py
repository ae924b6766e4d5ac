import numpy as np
import pytest

from imaging.volume import Volume, write_volume_binary, write_volume_text


@pytest.fixture
def rng():
    """Seeded generator so randomized property checks are reproducible."""
    return np.random.default_rng(20261018)


@pytest.fixture
def volume_file(tmp_path):
    """Factory: write a volume from flat values and return its path."""
    counter = {"n": 0}

    def _write(dims, values, time_stamp=0, binary=False):
        counter["n"] += 1
        volume = Volume.from_flat(dims, values, time_stamp)
        suffix = "bin" if binary else "txt"
        path = tmp_path / f"frame_{counter['n']:03d}.{suffix}"
        if binary:
            write_volume_binary(volume, path)
        else:
            write_volume_text(volume, path)
        return str(path)

    return _write


@pytest.fixture
def text_file(tmp_path):
    """Factory: write raw text to a file and return its path."""
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)

    return _write
