import json

import pytest

from cli.commands import RunConfig, cmd_edges, cmd_fit, cmd_ghz, cmd_oracle
from errors import DegenerateInputError, DomainError, ParseError


def _lines(report):
    return [line.split(" ") for line in report.splitlines()]


# ── ghz ───────────────────────────────────────────────────────────────────────

def test_ghz_three():
    rows = _lines(cmd_ghz(3))
    assert [label for label, _ in rows] == ["|000⟩", "|111⟩"]
    assert all(value.startswith("0.7071067811865") for _, value in rows)


def test_ghz_two():
    assert [label for label, _ in _lines(cmd_ghz(2))] == ["|00⟩", "|11⟩"]


@pytest.mark.parametrize("n", [1, 25])
def test_ghz_out_of_range(n):
    with pytest.raises(DomainError, match="between 2 and 24"):
        cmd_ghz(n)


# ── oracle ────────────────────────────────────────────────────────────────────

def test_oracle_identity_table(text_file):
    rows = _lines(cmd_oracle(text_file("id.tt", "1 1\n0\n1\n")))
    assert [label for label, _ in rows] == ["|00⟩", "|11⟩"]
    assert all(value.startswith("0.7071067811865") for _, value in rows)


def test_oracle_constant_zero_table(text_file):
    rows = _lines(cmd_oracle(text_file("zero.tt", "1 1\n0\n0\n")))
    assert [label for label, _ in rows] == ["|00⟩", "|10⟩"]


def test_oracle_empty_file(text_file):
    with pytest.raises(ParseError, match="empty"):
        cmd_oracle(text_file("empty.tt", ""))


# ── edges ─────────────────────────────────────────────────────────────────────

def test_edges_constant_volume(volume_file):
    report = json.loads(cmd_edges([volume_file((2, 2, 1), [3.0] * 4)], RunConfig()))
    frame = report["frames"][0]
    assert frame["edges"] == [0.0, 0.0, 0.0, 0.0]
    assert frame["boundaries"] == []
    assert report["aggregate"] == {"method": "none"}


def test_edges_step_volume(volume_file):
    report = json.loads(cmd_edges([volume_file((4, 1, 1), [1.0, 1.0, 0.0, 0.0])], RunConfig()))
    assert report["frames"][0]["boundaries"] == [1]
    assert report["meta"]["num_qubits"] == 2
    assert report["meta"]["drop_wraparound"] is True


def test_edges_keep_wraparound(volume_file):
    config = RunConfig(drop_wraparound=False)
    report = json.loads(cmd_edges([volume_file((4, 1, 1), [1.0, 1.0, 0.0, 0.0])], config))
    assert report["frames"][0]["boundaries"] == [1, 3]


def test_edges_mode_over_identical_frames(volume_file):
    paths = [volume_file((4, 1, 1), [1.0, 1.0, 0.0, 0.0], time_stamp=s) for s in range(3)]
    report = json.loads(cmd_edges(paths, RunConfig(aggregation="mode-most"), workers=2))
    assert report["aggregate"]["method"] == "mode-most"
    assert report["aggregate"]["mask"] == report["frames"][0]["mask"]
    assert report["aggregate"]["boundaries"] == [1]


def test_edges_frames_sorted_by_time(volume_file):
    late = volume_file((2, 1, 1), [1.0, 2.0], time_stamp=9)
    early = volume_file((2, 1, 1), [2.0, 1.0], time_stamp=4)
    report = json.loads(cmd_edges([late, early], RunConfig(aggregation="average")))
    assert [f["time"] for f in report["frames"]] == [4, 9]
    assert len(report["aggregate"]["values"]) == 2


def test_edges_binary_input(volume_file):
    path = volume_file((4, 1, 1), [1.0, 1.0, 0.0, 0.0], binary=True)
    report = json.loads(cmd_edges([path], RunConfig(), binary=True))
    assert report["frames"][0]["boundaries"] == [1]


def test_edges_csv_format(volume_file):
    path = volume_file((4, 1, 1), [1.0, 1.0, 0.0, 0.0])
    report = cmd_edges([path], RunConfig(output_format="csv", aggregation="max"))
    lines = report.splitlines()
    assert lines[0] == "section,time,position,edge,mask"
    assert len(lines) == 1 + 4 + 4
    assert lines[-1].startswith("aggregate:max,")


def test_edges_zero_frame(volume_file):
    path = volume_file((2, 1, 1), [0.0, 0.0], time_stamp=7)
    with pytest.raises(DegenerateInputError, match="s=7"):
        cmd_edges([path], RunConfig())


def test_edges_ragged_dims(volume_file):
    paths = [volume_file((2, 1, 1), [1.0, 2.0], time_stamp=0),
             volume_file((4, 1, 1), [1.0, 2.0, 3.0, 4.0], time_stamp=1)]
    with pytest.raises(DomainError, match="dims"):
        cmd_edges(paths, RunConfig())


def test_run_config_validation():
    with pytest.raises(DomainError, match="epsilon"):
        RunConfig(epsilon=-1.0)
    with pytest.raises(DomainError, match="aggregation"):
        RunConfig(aggregation="median")


# ── fit ───────────────────────────────────────────────────────────────────────

def test_fit_doubling(text_file):
    report = cmd_fit(text_file("y2x.csv", "1,2\n2,4\n3,6\n"), learning_rate=0.1, iterations=3000)
    values = dict(line.split(" ") for line in report.splitlines())
    assert abs(float(values["theta_0"])) < 1e-6
    assert abs(float(values["theta_1"]) - 2.0) < 1e-6
    assert float(values["cost"]) < 1e-8
    assert values["iterations"] == "3000"


def test_fit_zero_iterations(text_file):
    report = cmd_fit(text_file("y2x.csv", "1,2\n2,4\n3,6\n"), iterations=0)
    values = dict(line.split(" ") for line in report.splitlines())
    assert float(values["theta_1"]) == 0.0
    assert float(values["cost"]) == pytest.approx(56 / 6)


@pytest.mark.parametrize("epsilon", [float("inf"), float("nan")])
def test_run_config_rejects_non_finite_epsilon(epsilon):
    with pytest.raises(DomainError, match="finite"):
        RunConfig(epsilon=epsilon)
