from math import comb

import pytest

from trifactor.base import build_base, lift_to_star
from trifactor.errors import ConditionError
from trifactor.graphs import GraphColoring, factorize_complete_graph
from trifactor.model import Params, VertexId
from trifactor.verify import verify_c1_c4


def test_lift_single_edge():
    gc = GraphColoring(n=2, lam=1, r=(1,), pair_colors={(0, 1): (1,)})
    edges = lift_to_star(gc)
    assert len(edges) == 2
    u, v = VertexId(1, 1), VertexId(2, 1)
    assert edges[0].verts == (u, u, v)
    assert edges[1].verts == (u, v, v)
    assert all(e.color == 1 for e in edges)
    # each vertex: one double occurrence plus one single = degree 3
    for w in (u, v):
        assert sum(e.verts.count(w) for e in edges) == 3


def test_lift_empty():
    assert lift_to_star(GraphColoring(n=3, lam=1, r=(), pair_colors={})) == []


def test_lift_triples_per_color_degree():
    gc = factorize_complete_graph(4, 1, (1, 1, 1))
    edges = lift_to_star(gc)
    for v in range(4):
        for color in (1, 2, 3):
            vid = VertexId(v + 1, 1)
            occ = sum(e.verts.count(vid) for e in edges if e.color == color)
            assert occ == 3 * 1


def test_build_base_smallest():
    base = build_base(Params(1, 2, 2, (3,)))
    assert base.order == 2
    assert base.edge_count() == 4
    u, v = VertexId(1, 1), VertexId(2, 1)
    assert base.weights == {u: 2, v: 2}
    assert base.multiplicity((u, u, v)) == 2
    assert base.multiplicity((u, v, v)) == 2
    assert base.degree(u, color=1) == 6


def test_build_base_busier():
    base = build_base(Params(1, 3, 2, (9,)))
    # seed fold count is lam * m * C(m, 2) = 9
    assert base.edge_count() == 2 * 9 * comb(2, 2)
    assert base.degree(VertexId(1, 1), color=1) == 27


def test_build_base_part_weight_sums():
    for params in [Params(1, 2, 2, (3,)), Params(2, 3, 3, (12, 24)), Params(1, 4, 2, (6, 12))]:
        base = build_base(params)
        for part in range(1, params.n + 1):
            assert sum(base.weights[v] for v in base.parts[part]) == params.m


def test_build_base_passes_full_audit():
    for params in [Params(1, 2, 2, (3,)), Params(1, 3, 3, (6, 12)), Params(2, 2, 4, (3, 3, 6, 6))]:
        assert verify_c1_c4(build_base(params)).passed


def test_build_base_edge_count_matches_final():
    params = Params(2, 3, 3, (12, 24))
    base = build_base(params)
    assert base.edge_count() == params.complete_edge_count


def test_build_base_gate():
    with pytest.raises(ConditionError) as exc:
        build_base(Params(1, 2, 2, (1, 1, 1)))
    assert "S1" in str(exc.value)
