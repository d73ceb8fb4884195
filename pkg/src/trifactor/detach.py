"""Detachment: peel single-weight vertices off an amalgamated design.

One step picks a vertex of weight g >= 2, splits off a brand-new vertex of
weight 1 in the same part, and reroutes an equitable share of the edge
occurrences to it. Occurrences are tracked as hinges (edge id, slot); the
share is chosen by the laminar split so that every per-color degree, every
multiplicity context, and every per-edge cap lands exactly where the
invariants demand. Iterating to weight 1 everywhere yields the finished
factorization.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InternalDefectError
from .laminar import SplitRequest, split
from .model import Design, EdgeInstance, VertexId, canonical_triple
from .verify import verify_c1_c4


@dataclass(frozen=True, order=True)
class Hinge:
    """One occurrence of the vertex being detached: edge id plus slot 1 or 2."""

    edge: int
    slot: int


@dataclass(frozen=True)
class HingeFamilies:
    hinges: tuple[Hinge, ...]
    fam_a: tuple[tuple[Hinge, ...], ...]
    fam_b: tuple[tuple[Hinge, ...], ...]


def build_hinge_families(design: Design, vertex: VertexId) -> HingeFamilies:
    """Ground set and both constraint families for detaching one vertex.

    Family A: one member per color (all hinges of that color) plus one
    member per incident edge copy (its 1 or 2 hinges). Nested, so laminar.
    Family B: hinges grouped by what the rest of the edge looks like, the
    key being (occurrences of the vertex, sorted other vertices). Disjoint
    groups, so trivially laminar.
    """
    hinges: list[Hinge] = []
    by_color: dict[int, list[Hinge]] = {}
    by_edge: list[tuple[Hinge, ...]] = []
    by_context: dict[tuple, list[Hinge]] = {}
    for e in design.edges:
        cnt = e.verts.count(vertex)
        if cnt == 0:
            continue
        others = tuple(v for v in e.verts if v != vertex)
        mine = tuple(Hinge(e.id, s) for s in range(1, cnt + 1))
        hinges.extend(mine)
        by_color.setdefault(e.color, []).extend(mine)
        by_edge.append(mine)
        by_context.setdefault((cnt, others), []).extend(mine)

    fam_a = tuple(tuple(by_color[c]) for c in sorted(by_color)) + tuple(by_edge)
    fam_b = tuple(tuple(by_context[key]) for key in sorted(by_context))
    return HingeFamilies(tuple(hinges), fam_a, fam_b)


def detach_one(design: Design, vertex: VertexId) -> Design:
    """Split one weight-1 vertex off ``vertex``; returns the new design.

    The new vertex takes the next free index in the same part. Exactly a
    1/g share of every color class and every context group moves with it,
    and never both hinges of one edge, so the detached vertex is r_i-regular
    in every color and never doubled inside an edge.
    """
    g = design.weights.get(vertex)
    if g is None:
        raise ValueError(f"unknown vertex {vertex}")
    if g < 2:
        raise ValueError(f"{vertex.label()} has weight {g}, nothing to detach")

    fams = build_hinge_families(design, vertex)
    z = split(SplitRequest(fams.hinges, fams.fam_a, fams.fam_b, divisor=g))

    moved = Counter(h.edge for h in z)
    if any(c > 1 for c in moved.values()):
        raise InternalDefectError("both hinges of one edge selected")

    fresh = VertexId(vertex.part, design.max_index(vertex.part) + 1)
    new_edges = []
    for e in design.edges:
        if moved[e.id]:
            vs = list(e.verts)
            vs.remove(vertex)
            vs.append(fresh)
            new_edges.append(EdgeInstance(e.id, canonical_triple(vs), e.color))
        else:
            new_edges.append(e)

    weights = dict(design.weights)
    weights[vertex] = g - 1
    weights[fresh] = 1
    out = Design(design.params, design.vertices + (fresh,), weights, new_edges)

    for i, ri in enumerate(design.params.r, start=1):
        if out.degree(fresh, color=i) != ri:
            raise InternalDefectError(
                f"detached vertex has degree {out.degree(fresh, color=i)} in color {i}, wanted {ri}"
            )
        if out.degree(vertex, color=i) != ri * (g - 1):
            raise InternalDefectError(
                f"residual vertex has degree {out.degree(vertex, color=i)} in color {i}, wanted {ri * (g - 1)}"
            )
    for u in out.vertices:
        if u != fresh and out.multiplicity((fresh, fresh, u)) != 0:
            raise InternalDefectError(f"detached vertex doubled against {u.label()}")
    return out


def detach_all(design: Design, check_each_step: bool = False) -> Design:
    """Run detachments until every weight is 1, smallest vertex first.

    With check_each_step the full amalgamated audit runs after every step,
    turning any invariant drift into an immediate InternalDefectError.
    """
    expected = sum(g - 1 for g in design.weights.values())
    steps = 0
    cur = design
    while True:
        heavy = [v for v in cur.vertices if cur.weights[v] > 1]
        if not heavy:
            break
        cur = detach_one(cur, min(heavy))
        steps += 1
        if check_each_step:
            report = verify_c1_c4(cur)
            if not report.passed:
                raise InternalDefectError(f"invariants broken after step {steps}: {report}")
    if steps != expected:
        raise InternalDefectError(f"ran {steps} detachments, expected {expected}")
    return cur
