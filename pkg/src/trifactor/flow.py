"""Integral max-flow with optional lower bounds on arcs.

Small, deterministic Dinic implementation. Networks in this package have a
few thousand nodes at most, so asymptotics are irrelevant; what matters is
that results are integral and reproducible. Adjacency follows insertion
order and all traversals are iterative, so there is no recursion limit or
hash-order dependence anywhere.
"""

from __future__ import annotations

from collections import deque

INF = 10**18


class FlowNetwork:
    """Capacitated digraph supporting repeated max-flow pushes."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        # arc storage: to[i], cap[i]; arcs come in i, i^1 residual pairs
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        """Add u -> v with the given capacity; returns the arc index."""
        if capacity < 0:
            raise ValueError(f"negative capacity {capacity}")
        i = len(self.to)
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[u].append(i)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(i + 1)
        return i

    def flow_on(self, arc: int, original_capacity: int) -> int:
        """Flow currently routed through an arc added with add_arc."""
        return original_capacity - self.cap[arc]

    def _bfs_levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for i in self.adj[u]:
                v = self.to[i]
                if self.cap[i] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def _dfs_augment(self, s: int, t: int, level: list[int]) -> int:
        """One blocking-flow phase, iterative with per-node arc cursors."""
        total = 0
        it = [0] * self.num_nodes
        while True:
            # walk forward from s along admissible arcs
            path: list[int] = []
            u = s
            while u != t:
                advanced = False
                while it[u] < len(self.adj[u]):
                    i = self.adj[u][it[u]]
                    v = self.to[i]
                    if self.cap[i] > 0 and level[v] == level[u] + 1:
                        path.append(i)
                        u = v
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    if u == s:
                        return total
                    # dead end: retreat one step and advance that cursor
                    level[u] = -1
                    back = path.pop()
                    u = self.to[back ^ 1]
                    it[u] += 1
            push = min(self.cap[i] for i in path)
            for i in path:
                self.cap[i] -= push
                self.cap[i ^ 1] += push
            total += push
            # restart the walk; cursors keep their progress
            u = s

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._bfs_levels(s, t)
            if level is None:
                return total
            total += self._dfs_augment(s, t, level)


def solve_with_lower_bounds(num_nodes: int, arcs, source: int, sink: int):
    """Feasible integral flow respecting [lo, hi] bounds on every arc.

    ``arcs`` is a sequence of (u, v, lo, hi). Returns per-arc flows in the
    given order, or None when no feasible flow exists. Standard excess
    transformation: each lower bound is pushed as mandatory flow through a
    super source and sink, and the original sink is wired back to the
    source with unbounded capacity.
    """
    arcs = list(arcs)
    for u, v, lo, hi in arcs:
        if not (0 <= lo <= hi):
            raise ValueError(f"bad bounds [{lo}, {hi}] on arc {u}->{v}")

    ss = num_nodes
    tt = num_nodes + 1
    net = FlowNetwork(num_nodes + 2)
    excess = [0] * num_nodes
    arc_ids = []
    for u, v, lo, hi in arcs:
        arc_ids.append(net.add_arc(u, v, hi - lo))
        excess[u] -= lo
        excess[v] += lo
    net.add_arc(sink, source, INF)
    need = 0
    for node, e in enumerate(excess):
        if e > 0:
            net.add_arc(ss, node, e)
            need += e
        elif e < 0:
            net.add_arc(node, tt, -e)

    if net.max_flow(ss, tt) != need:
        return None
    return [lo + net.flow_on(i, hi - lo) for i, (_, _, lo, hi) in zip(arc_ids, arcs)]
