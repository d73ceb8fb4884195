"""Equitable subset selection across two laminar families.

Given a ground set S, two laminar families A and B over S, and a divisor d,
there is always a subset Z taking between floor(|P|/d) and ceil(|P|/d)
elements of every member P of either family (and of S itself). This module
finds one such Z with a feasible integral flow: each family becomes a
forest with one bounded arc per member, each ground element a unit arc
from its deepest A-node to its deepest B-node. Total unimodularity makes
the fractional solution (take everything at rate 1/d) round to an integral
one, so the solve cannot fail on valid input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalDefectError
from .flow import INF, solve_with_lower_bounds


class LaminarFamily:
    """Forest form of a laminar set family over an ordered ground set.

    Node 0 is always the whole ground. Members may repeat or equal the
    ground; equal sets nest. Raises ValueError if two members properly
    intersect, or if a member leaves the ground.
    """

    def __init__(self, ground, members):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground set has repeated elements")
        gset = frozenset(self.ground)
        self.members = tuple(frozenset(m) for m in members)
        for m in self.members:
            if not m <= gset:
                raise ValueError("member has elements outside the ground set")
            if not m:
                raise ValueError("empty member")

        self.node_sets: list[frozenset] = [gset]
        self.node_parent: list[int | None] = [None]
        self.node_children: list[list[int]] = [[]]
        # supersets must enter the forest before their subsets
        for idx in sorted(range(len(self.members)), key=lambda i: (-len(self.members[i]), i)):
            self._insert(self.members[idx])

    def _insert(self, m: frozenset):
        cur = 0
        while True:
            nxt = None
            for child in self.node_children[cur]:
                cs = self.node_sets[child]
                if m <= cs:
                    nxt = child
                    break
                if m & cs:
                    raise ValueError("members properly intersect; family is not laminar")
            if nxt is None:
                break
            cur = nxt
        node = len(self.node_sets)
        self.node_sets.append(m)
        self.node_parent.append(cur)
        self.node_children[cur].append(node)
        self.node_children.append([])

    def deepest(self, item) -> int:
        """Index of the smallest node containing the item."""
        if item not in self.node_sets[0]:
            raise ValueError(f"{item!r} is not in the ground set")
        cur = 0
        while True:
            for child in self.node_children[cur]:
                if item in self.node_sets[child]:
                    cur = child
                    break
            else:
                return cur

    def __len__(self) -> int:
        return len(self.node_sets)


@dataclass(frozen=True)
class SplitRequest:
    """One equitable-selection problem: pick about 1/divisor of the ground.

    fam_a and fam_b are sequences of members (element collections); each
    must form a laminar family over the ground. Member and element order
    fix the solver's tie-breaking, so equal requests reproduce equal
    answers.
    """

    ground: tuple
    fam_a: tuple
    fam_b: tuple
    divisor: int

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(self.ground))
        object.__setattr__(self, "fam_a", tuple(tuple(sorted(m)) for m in self.fam_a))
        object.__setattr__(self, "fam_b", tuple(tuple(sorted(m)) for m in self.fam_b))
        if self.divisor < 1:
            raise ValueError(f"divisor must be positive, got {self.divisor}")

    def bounds_of(self, member_size: int) -> tuple[int, int]:
        return member_size // self.divisor, -(-member_size // self.divisor)

    def satisfied_by(self, z) -> bool:
        """Direct audit of every bound, including the ground's."""
        z = frozenset(z)
        if not z <= frozenset(self.ground):
            return False
        for fam in ((self.ground,), self.fam_a, self.fam_b):
            for member in fam:
                lo, hi = self.bounds_of(len(member))
                if not lo <= len(z & frozenset(member)) <= hi:
                    return False
        return True


def split(req: SplitRequest) -> frozenset:
    """Select a subset meeting every floor/ceil intersection bound.

    Raises ValueError on malformed families and InternalDefectError if no
    feasible selection exists, which a valid request can never trigger.
    """
    tree_a = LaminarFamily(req.ground, req.fam_a)
    tree_b = LaminarFamily(req.ground, req.fam_b)

    # node j of either tree splits into an entry/exit pair whose joining
    # arc carries that member's intersection bounds
    source, sink = 0, 1
    base_a = 2
    base_b = base_a + 2 * len(tree_a)
    num_nodes = base_b + 2 * len(tree_b)
    a_in = lambda j: base_a + 2 * j
    a_out = lambda j: base_a + 2 * j + 1
    b_in = lambda j: base_b + 2 * j
    b_out = lambda j: base_b + 2 * j + 1

    arcs: list[tuple[int, int, int, int]] = []
    for j, s in enumerate(tree_a.node_sets):
        lo, hi = req.bounds_of(len(s))
        arcs.append((a_in(j), a_out(j), lo, hi))
        parent = tree_a.node_parent[j]
        if parent is None:
            arcs.append((source, a_in(j), 0, INF))
        else:
            arcs.append((a_out(parent), a_in(j), 0, INF))
    for j, s in enumerate(tree_b.node_sets):
        # the A side already bounds the ground; keep one source of truth
        lo, hi = (0, INF) if j == 0 else req.bounds_of(len(s))
        arcs.append((b_in(j), b_out(j), lo, hi))
        parent = tree_b.node_parent[j]
        if parent is None:
            arcs.append((b_out(j), sink, 0, INF))
        else:
            arcs.append((b_out(j), b_in(parent), 0, INF))

    hinge_arcs = []
    for item in req.ground:
        hinge_arcs.append(len(arcs))
        arcs.append((a_out(tree_a.deepest(item)), b_in(tree_b.deepest(item)), 0, 1))

    flows = solve_with_lower_bounds(num_nodes, arcs, source, sink)
    if flows is None:
        raise InternalDefectError("no equitable selection exists for this request")
    z = frozenset(item for item, ai in zip(req.ground, hinge_arcs) if flows[ai] == 1)
    if not req.satisfied_by(z):
        raise InternalDefectError("selection violates its own bounds")
    return z


def split_oracle(req: SplitRequest) -> list[frozenset]:
    """All subsets meeting the bounds, by brute force. Test-sized only."""
    ground = req.ground
    if len(ground) > 20:
        raise ValueError("oracle enumeration capped at 20 ground elements")
    out = []
    for mask in range(1 << len(ground)):
        z = frozenset(ground[i] for i in range(len(ground)) if mask >> i & 1)
        if req.satisfied_by(z):
            out.append(z)
    return out
