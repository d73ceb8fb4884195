"""The fully amalgamated starting design and the graph-to-triple lift.

Collapsing each part of the target design to a single vertex of weight m
turns the problem into factorizing a complete multigraph on n vertices
with a boosted fold count. Each colored graph edge then lifts to a pair of
doubled-vertex triples. The resulting design satisfies the amalgamated
invariants C1 to C4 and is the input to the detachment loop.
"""

from __future__ import annotations

from math import comb

from .errors import ConditionError
from .graphs import GraphColoring, factorize_complete_graph
from .model import Design, EdgeInstance, Params, VertexId, canonical_triple
from .verify import check_sufficiency


def lift_to_star(gc: GraphColoring) -> list[EdgeInstance]:
    """Replace each colored graph edge copy {u, v} by the triple pair
    {u, u, v} and {v, v, u}, keeping the color.

    Graph vertex j becomes the amalgamated vertex (part j+1, index 1).
    Per-color vertex degrees triple: a graph edge at u contributes one
    doubled occurrence (2) plus one single occurrence (1).
    """
    edges = []
    next_id = 0
    for (a, b), colors in sorted(gc.pair_colors.items()):
        va = VertexId(a + 1, 1)
        vb = VertexId(b + 1, 1)
        for color in colors:
            edges.append(EdgeInstance(next_id, canonical_triple((va, va, vb)), color))
            next_id += 1
            edges.append(EdgeInstance(next_id, canonical_triple((vb, vb, va)), color))
            next_id += 1
    return edges


def build_base(params: Params) -> Design:
    """Construct the weight-m amalgamated design for a gated instance.

    Raises ConditionError if the instance fails the arithmetic gate. The
    seed graph problem uses fold count lam * m * C(m, 2) and per-color
    degrees r_i * m / 3; the gate makes those integers and makes the seed
    problem's own entry conditions hold.
    """
    report = check_sufficiency(params)
    if not report.passed:
        raise ConditionError(report)

    lam2 = params.lam * params.m * comb(params.m, 2)
    r2 = tuple(ri * params.m // 3 for ri in params.r)
    gc = factorize_complete_graph(params.n, lam2, r2)

    vertices = [VertexId(p, 1) for p in range(1, params.n + 1)]
    weights = {v: params.m for v in vertices}
    return Design(params, vertices, weights, lift_to_star(gc))
