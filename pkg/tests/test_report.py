import csv
import re

import pytest

from trifactor.base import build_base
from trifactor.model import Params, VertexId
from trifactor.pipeline import construct_design, uniform_params
from trifactor.report import (
    person_label,
    render_schedule_figure,
    schedule_days,
    schedule_lines,
    schedule_rows,
    write_schedule_csv,
)


def test_person_labels():
    assert person_label(VertexId(1, 1)) == "A1"
    assert person_label(VertexId(2, 3)) == "B3"
    assert person_label(VertexId(26, 1)) == "Z1"
    assert person_label(VertexId(27, 2)) == "AA2"


@pytest.fixture(scope="module")
def nine_day_design():
    return construct_design(uniform_params(1, 3, 2, 1))


def test_nine_days_two_meetings_each(nine_day_design):
    days = schedule_days(nine_day_design)
    assert len(days) == 9
    for meetings in days:
        assert len(meetings) == 2
        attendance = [p for people in meetings for p in people]
        assert sorted(attendance) == ["A1", "A2", "A3", "B1", "B2", "B3"]


def test_single_day_design():
    days = schedule_days(construct_design(Params(1, 2, 2, (3,))))
    assert len(days) == 1
    assert len(days[0]) == 4
    flat = [p for people in days[0] for p in people]
    assert all(flat.count(person) == 3 for person in ("A1", "A2", "B1", "B2"))


def test_line_format(nine_day_design):
    lines = schedule_lines(nine_day_design)
    assert lines[0].startswith("Day 1: {")
    pattern = re.compile(r"^Day \d+: \{[A-Z]+\d+(, [A-Z]+\d+){2}\}$")
    meeting_lines = [ln for ln in lines if ln]
    assert all(pattern.match(ln) for ln in meeting_lines)
    # one line per edge, one blank line between consecutive days
    assert len(meeting_lines) == nine_day_design.edge_count()
    assert len(lines) - len(meeting_lines) == 8


def test_rows_and_csv(tmp_path, nine_day_design):
    rows = schedule_rows(nine_day_design)
    assert len(rows) == 3 * nine_day_design.edge_count()
    assert rows[0][:2] == (1, 1)
    path = tmp_path / "schedule.csv"
    write_schedule_csv(nine_day_design, path)
    with open(path, newline="") as fh:
        recs = list(csv.reader(fh))
    assert recs[0] == ["day", "meeting", "person"]
    assert len(recs) == 1 + len(rows)
    assert recs[1] == ["1", "1", rows[0][2]]


def test_schedule_rejects_nonuniform_and_unfinished():
    mixed = construct_design(Params(1, 3, 2, (3, 6)))
    with pytest.raises(ValueError):
        schedule_days(mixed)
    base = build_base(Params(1, 2, 2, (3,)))
    with pytest.raises(ValueError):
        schedule_lines(base)


def test_figure_rendering(tmp_path, nine_day_design):
    path = tmp_path / "grid.png"
    render_schedule_figure(nine_day_design, path)
    data = path.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000
