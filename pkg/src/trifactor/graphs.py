"""Equitable factorizations of the lambda-fold complete graph.

This is the seed layer: the multipartite construction starts from a
factorization of a small complete multigraph on the parts. Two classical
decompositions cover everything the entry conditions admit:

  even order   -> a 1-factorization into perfect matchings (circle method),
  odd order    -> a Hamiltonian decomposition into cycles (rotating zigzag),

and factors are assembled from those unit pieces greedily in color order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ConditionError
from .verify import AuditReport, Violation

Pair = tuple[int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class GraphColoring:
    """A factorization of lam copies of the complete graph on n vertices.

    Vertices are 0..n-1. ``pair_colors[(u, v)]`` with u < v lists the colors
    of the lam parallel copies of edge uv, in construction order.
    """

    n: int
    lam: int
    r: tuple[int, ...]
    pair_colors: dict[Pair, tuple[int, ...]]

    def degree(self, v: int, color: int) -> int:
        return sum(
            cs.count(color)
            for (a, b), cs in self.pair_colors.items()
            if v in (a, b)
        )

    def pair_multiplicity(self, u: int, v: int, color: int | None = None) -> int:
        cs = self.pair_colors.get(_pair(u, v), ())
        return len(cs) if color is None else cs.count(color)


def check_graph_conditions(n: int, lam: int, r) -> AuditReport:
    """Entry gate: r_i * n even for every i, and sum(r) = lam * (n - 1)."""
    r = tuple(r)
    if n < 2 or lam < 1 or not r or any(ri < 1 for ri in r):
        raise ValueError("need n >= 2, lam >= 1, and positive factor degrees")
    bad = []
    for i, ri in enumerate(r, start=1):
        if (ri * n) % 2 != 0:
            bad.append(Violation("parity", f"r[{i}]", "2 | r*n", f"{ri}*{n} = {ri * n}"))
    if sum(r) != lam * (n - 1):
        bad.append(Violation("sum", "sum(r)", lam * (n - 1), sum(r)))
    return AuditReport(tuple(bad))


def round_robin_matchings(n: int) -> list[list[Pair]]:
    """Perfect matchings partitioning the complete graph, n even.

    Round t pairs the pivot n-1 with t and wraps the rest around the circle
    0..n-2. The n-1 rounds together use every edge once.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"need even n >= 2, got {n}")
    rounds = []
    mod = n - 1
    for t in range(mod):
        matching = [_pair(n - 1, t)]
        for j in range(1, n // 2):
            matching.append(_pair((t + j) % mod, (t - j) % mod))
        rounds.append(sorted(matching))
    return rounds


def walecki_cycles(n: int) -> list[list[Pair]]:
    """Hamiltonian cycles partitioning the complete graph, n odd.

    One hub vertex plus an even rim. A zigzag path across the rim, closed
    through the hub, is rotated (n - 1) / 2 times; the rotations are
    pairwise edge-disjoint and exhaust all edges.
    """
    if n < 3 or n % 2 != 1:
        raise ValueError(f"need odd n >= 3, got {n}")
    hub = n - 1
    rim = n - 1
    half = rim // 2
    seq = [0]
    for j in range(1, half):
        seq.append(j)
        seq.append(rim - j)
    seq.append(half)
    cycles = []
    for t in range(half):
        path = [hub] + [(s + t) % rim for s in seq] + [hub]
        cycles.append(sorted(_pair(path[i], path[i + 1]) for i in range(len(path) - 1)))
    return cycles


def factorize_complete_graph(n: int, lam: int, r) -> GraphColoring:
    """Color lam copies of each complete-graph edge so color i is r_i-regular.

    Raises ConditionError when the parity or degree-sum gate fails. The
    construction is deterministic: unit pieces (matchings for even n,
    cycles for odd n) are laid out in a fixed order over the lam copies,
    then colors consume pieces in ascending color order.
    """
    r = tuple(r)
    report = check_graph_conditions(n, lam, r)
    if not report.passed:
        raise ConditionError(report)

    if n % 2 == 0:
        units = round_robin_matchings(n)  # each unit adds degree 1
        unit_degree = 1
    else:
        units = walecki_cycles(n)  # each unit adds degree 2
        unit_degree = 2

    # lam sweeps over the same unit list, flattened in (copy, unit) order.
    lineup = [u for _ in range(lam) for u in units]

    pair_colors: dict[Pair, list[int]] = {}
    pos = 0
    for color, ri in enumerate(r, start=1):
        need, rem = divmod(ri, unit_degree)
        # odd n forces every r_i even via the parity gate, so rem == 0
        assert rem == 0
        for _ in range(need):
            for e in lineup[pos]:
                pair_colors.setdefault(e, []).append(color)
            pos += 1
    assert pos == len(lineup), "degree sum must consume every unit exactly"

    return GraphColoring(n=n, lam=lam, r=r, pair_colors={e: tuple(cs) for e, cs in sorted(pair_colors.items())})
