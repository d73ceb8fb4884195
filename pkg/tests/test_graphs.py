from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trifactor.errors import ConditionError
from trifactor.graphs import (
    check_graph_conditions,
    factorize_complete_graph,
    round_robin_matchings,
    walecki_cycles,
)

import oracles


def test_entry_conditions():
    assert check_graph_conditions(4, 1, (1, 1, 1)).passed
    assert check_graph_conditions(5, 1, (2, 2)).passed
    rep = check_graph_conditions(5, 1, (1, 3))
    assert not rep.passed
    assert {v.check for v in rep.violations} == {"parity"}
    rep = check_graph_conditions(4, 1, (1, 1))
    assert {v.check for v in rep.violations} == {"sum"}
    with pytest.raises(ValueError):
        check_graph_conditions(1, 1, (1,))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_round_robin_partitions_into_perfect_matchings(n):
    rounds = round_robin_matchings(n)
    assert len(rounds) == n - 1
    seen = Counter()
    for matching in rounds:
        touched = [v for e in matching for v in e]
        assert sorted(touched) == list(range(n))  # perfect: each vertex once
        seen.update(matching)
    assert seen == Counter(combinations(range(n), 2))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_walecki_partitions_into_hamiltonian_cycles(n):
    cycles = walecki_cycles(n)
    assert len(cycles) == (n - 1) // 2
    seen = Counter()
    for cycle in cycles:
        deg = Counter(v for e in cycle for v in e)
        assert deg == Counter({v: 2 for v in range(n)})  # spanning, 2-regular
        # connectivity: walk the cycle and count distinct vertices reached
        adj = {}
        for a, b in cycle:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        reached = set()
        stack = [0]
        while stack:
            v = stack.pop()
            if v in reached:
                continue
            reached.add(v)
            stack.extend(adj[v])
        assert len(reached) == n
        seen.update(cycle)
    assert seen == Counter(combinations(range(n), 2))


def test_unit_constructors_reject_wrong_parity():
    with pytest.raises(ValueError):
        round_robin_matchings(5)
    with pytest.raises(ValueError):
        walecki_cycles(4)


def test_factorize_two_vertices():
    gc = factorize_complete_graph(2, 3, (3,))
    assert gc.pair_colors == {(0, 1): (1, 1, 1)}
    assert gc.degree(0, 1) == 3


def test_factorize_into_matchings():
    gc = factorize_complete_graph(4, 1, (1, 1, 1))
    for color in (1, 2, 3):
        pairs = [e for e, cs in gc.pair_colors.items() if color in cs]
        assert sorted(v for e in pairs for v in e) == [0, 1, 2, 3]


def test_factorize_into_triangles():
    gc = factorize_complete_graph(3, 2, (2, 2))
    for color in (1, 2):
        assert sum(cs.count(color) for cs in gc.pair_colors.values()) == 3
        for v in range(3):
            assert gc.degree(v, color) == 2


def test_factorize_rejects_gate_failures():
    with pytest.raises(ConditionError) as exc:
        factorize_complete_graph(5, 1, (1, 3))
    assert "parity" in str(exc.value)
    with pytest.raises(ConditionError):
        factorize_complete_graph(4, 1, (1, 1))


def _assert_valid_coloring(gc):
    all_pairs = Counter()
    degrees = Counter()
    for (a, b), colors in gc.pair_colors.items():
        assert len(colors) == gc.lam
        all_pairs[a, b] = len(colors)
        for c in colors:
            degrees[a, c] += 1
            degrees[b, c] += 1
    assert all_pairs == Counter({p: gc.lam for p in combinations(range(gc.n), 2)})
    for v in range(gc.n):
        for i, ri in enumerate(gc.r, start=1):
            assert degrees[v, i] == ri


@given(st.data())
def test_factorize_random_instances(data):
    n = data.draw(st.integers(2, 9))
    lam = data.draw(st.integers(1, 3))
    rng_seed = data.draw(st.integers(0, 2**20))
    import random

    r = oracles.random_graph_factor_vector(random.Random(rng_seed), n, lam)
    _assert_valid_coloring(factorize_complete_graph(n, lam, r))


def test_determinism():
    a = factorize_complete_graph(7, 2, (4, 4, 4))
    b = factorize_complete_graph(7, 2, (4, 4, 4))
    assert a == b
