"""Colored 3-uniform multipartite multi-hypergraphs with amalgamation weights.

A design stores one record per edge copy. Every edge is a canonical sorted
triple of vertex ids; a vertex may occur twice in a triple (shape {u,u,v})
but never three times. Each vertex carries a positive amalgamation weight:
weight w means the vertex stands for w not-yet-separated vertices of its
part. Degree and multiplicity queries are exact integer counts backed by
caches built once at construction time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True, order=True)
class VertexId:
    """A vertex: 1-based part number plus 1-based index within the part."""

    part: int
    index: int

    def label(self) -> str:
        return f"x_{self.part}_{self.index}"


Triple = tuple[VertexId, VertexId, VertexId]


def canonical_triple(verts) -> Triple:
    """Sort a 3-multiset of vertices by (part, index). Idempotent."""
    vs = tuple(sorted(verts))
    if len(vs) != 3:
        raise ValueError(f"an edge has exactly 3 vertex slots, got {len(vs)}")
    return vs


@dataclass(frozen=True)
class Params:
    """A problem instance: fold count, part size, part count, factor degrees.

    ``r[i-1]`` is the degree every vertex must have inside color class i of
    the finished factorization; ``k = len(r)`` is the number of factors.
    """

    lam: int
    m: int
    n: int
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if self.lam < 1:
            raise ValueError(f"lambda must be positive, got {self.lam}")
        if self.m < 1:
            raise ValueError(f"part size m must be positive, got {self.m}")
        if self.n < 2:
            raise ValueError(f"need at least 2 parts, got n={self.n}")
        if not self.r:
            raise ValueError("factor degree list r must be nonempty")
        if any(ri < 1 for ri in self.r):
            raise ValueError(f"all factor degrees must be positive, got {self.r}")

    @property
    def k(self) -> int:
        return len(self.r)

    @property
    def total_degree(self) -> int:
        """Degree of every vertex in the finished complete design."""
        return 3 * self.lam * (self.n - 1) * comb(self.m, 2)

    @property
    def complete_edge_count(self) -> int:
        """Number of edge copies in the finished complete design."""
        return 2 * self.lam * self.m * comb(self.n, 2) * comb(self.m, 2)


@dataclass(frozen=True)
class EdgeInstance:
    """One copy of one edge: a canonical triple plus a color in 1..k.

    ``id`` is the instance's position in its design's edge list; detachment
    rewrites vertices but never creates or destroys instances, so ids are
    stable across the whole construction.
    """

    id: int
    verts: Triple
    color: int

    def shape(self) -> tuple[int, ...]:
        """Sorted per-part occurrence counts, e.g. (1, 2) for a valid edge."""
        return tuple(sorted(Counter(v.part for v in self.verts).values()))


class Design:
    """A colored 3-uniform multipartite multi-hypergraph with weights.

    Treat instances as values: construction code builds a new Design per
    step rather than mutating one in place, and completed designs are safe
    to share read-only.
    """

    def __init__(self, params: Params, vertices, weights, edges):
        self.params = params
        self.vertices: tuple[VertexId, ...] = tuple(sorted(vertices))
        self.weights: dict[VertexId, int] = dict(weights)
        self.edges: tuple[EdgeInstance, ...] = tuple(edges)
        self._validate()

        self.parts: dict[int, tuple[VertexId, ...]] = {}
        for v in self.vertices:
            self.parts.setdefault(v.part, ())
            self.parts[v.part] += (v,)

        self._mult: Counter = Counter()
        self._mult_color: Counter = Counter()
        self._deg: Counter = Counter()
        self._deg_color: Counter = Counter()
        for e in self.edges:
            self._mult[e.verts] += 1
            self._mult_color[e.verts, e.color] += 1
            for v in e.verts:
                self._deg[v] += 1
                self._deg_color[v, e.color] += 1

    def _validate(self):
        p = self.params
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        seen_parts = set()
        for v in self.vertices:
            if not (1 <= v.part <= p.n) or v.index < 1:
                raise ValueError(f"vertex {v} outside the part structure")
            seen_parts.add(v.part)
        if seen_parts != set(range(1, p.n + 1)):
            raise ValueError("every part must contain at least one vertex")
        if len(self.vertices) > p.m * p.n:
            raise ValueError("more vertices than the finished design allows")
        if set(self.weights) != set(self.vertices):
            raise ValueError("weights must cover exactly the vertex set")
        if any(w < 1 for w in self.weights.values()):
            raise ValueError("weights must be positive")
        for pos, e in enumerate(self.edges):
            if e.id != pos:
                raise ValueError(f"edge id {e.id} at position {pos}")
            if e.verts != tuple(sorted(e.verts)):
                raise ValueError(f"edge {e.id} is not canonically sorted")
            if not (1 <= e.color <= p.k):
                raise ValueError(f"edge {e.id} has color {e.color} outside 1..{p.k}")
            if any(v not in self.weights for v in e.verts):
                raise ValueError(f"edge {e.id} uses an unknown vertex")

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degree(self, v: VertexId, color: int | None = None) -> int:
        """Occurrences of v over all edge copies; a doubled vertex counts 2."""
        if v not in self.weights:
            raise ValueError(f"unknown vertex {v}")
        if color is None:
            return self._deg[v]
        if not (1 <= color <= self.params.k):
            raise ValueError(f"color {color} outside 1..{self.params.k}")
        return self._deg_color[v, color]

    def multiplicity(self, verts, color: int | None = None) -> int:
        """Count of edge copies with exactly this vertex multiset.

        Unknown shapes (including any triple with a vertex repeated three
        times) simply count zero.
        """
        key = canonical_triple(verts)
        if color is None:
            return self._mult[key]
        return self._mult_color[key, color]

    def edge_count(self) -> int:
        return len(self.edges)

    def max_index(self, part: int) -> int:
        return max(v.index for v in self.parts[part])

    def edge_multiset(self) -> Counter:
        """Multiset of (triple, color) pairs; the design's identity."""
        return Counter((e.verts, e.color) for e in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return (
            self.params == other.params
            and self.vertices == other.vertices
            and self.weights == other.weights
            and self.edge_multiset() == other.edge_multiset()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"Design(order={self.order}, edges={len(self.edges)}, "
            f"k={self.params.k}, weights={sorted(self.weights.values())})"
        )
