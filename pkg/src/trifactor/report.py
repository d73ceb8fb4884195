"""Render a finished uniform design as a meeting schedule.

Reading: people are the vertices (n teams of m people), each factor is one
day, and each triple of color d is a meeting held on day d. Uniformity
(all factor degrees equal) makes the schedule fair: every person attends
exactly r meetings every day. Outputs: plain text blocks, delimited rows,
and a membership-grid figure.
"""

from __future__ import annotations

import csv

from matplotlib import colormaps
from matplotlib.figure import Figure

from .model import Design, VertexId


def person_label(v: VertexId) -> str:
    """Team letter plus 1-based member number: part 1 index 2 -> "A2"."""
    p = v.part - 1
    letters = ""
    while True:
        letters = chr(ord("A") + p % 26) + letters
        p = p // 26 - 1
        if p < 0:
            break
    return f"{letters}{v.index}"


def _require_uniform(design: Design) -> int:
    r = design.params.r
    if len(set(r)) != 1:
        raise ValueError(f"schedules need equal factor degrees, got {r}")
    if any(w != 1 for w in design.weights.values()):
        raise ValueError("schedules need a finished design (all weights 1)")
    return r[0]


def schedule_days(design: Design) -> list[list[tuple[str, str, str]]]:
    """Meetings grouped by day; day d holds the sorted triples of color d."""
    _require_uniform(design)
    days = []
    for color in range(1, design.params.k + 1):
        triples = sorted(e.verts for e in design.edges if e.color == color)
        days.append([tuple(person_label(v) for v in t) for t in triples])
    return days


def schedule_lines(design: Design) -> list[str]:
    """One line per meeting, days separated by a blank line."""
    lines = []
    for day, meetings in enumerate(schedule_days(design), start=1):
        if day > 1:
            lines.append("")
        for people in meetings:
            lines.append(f"Day {day}: {{{', '.join(people)}}}")
    return lines


def schedule_rows(design: Design) -> list[tuple[int, int, str]]:
    """Flat (day, meeting, person) rows; meetings numbered within their day."""
    rows = []
    for day, meetings in enumerate(schedule_days(design), start=1):
        for meeting, people in enumerate(meetings, start=1):
            for person in people:
                rows.append((day, meeting, person))
    return rows


def write_schedule_csv(design: Design, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["day", "meeting", "person"])
        w.writerows(schedule_rows(design))


def render_schedule_figure(design: Design, path) -> None:
    """Membership grid: people down the side, meetings across, tinted by day.

    Uses a standalone Figure so no global pyplot state is touched.
    """
    days = schedule_days(design)
    people = [person_label(v) for v in design.vertices]
    row = {label: i for i, label in enumerate(people)}
    slots = [(d, people_in) for d, meetings in enumerate(days) for people_in in meetings]

    cmap = colormaps["tab20"]
    grid = [[(1.0, 1.0, 1.0, 1.0)] * len(slots) for _ in people]
    for col, (d, attendees) in enumerate(slots):
        tint = cmap(d % 20)
        for person in attendees:
            grid[row[person]][col] = tint

    fig = Figure(figsize=(max(4.0, 0.22 * len(slots) + 1.5), max(3.0, 0.25 * len(people) + 1.2)))
    ax = fig.add_subplot(111)
    ax.imshow(grid, aspect="auto", interpolation="nearest")
    boundary = 0
    for meetings in days[:-1]:
        boundary += len(meetings)
        ax.axvline(boundary - 0.5, color="black", linewidth=0.8)
    ax.set_yticks(range(len(people)), labels=people, fontsize=7)
    ax.set_xticks([])
    ax.set_xlabel(f"meetings, {len(days)} days left to right")
    p = design.params
    ax.set_title(f"{p.n} teams of {p.m}, fold {p.lam}, {p.r[0]} meetings each per day")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
