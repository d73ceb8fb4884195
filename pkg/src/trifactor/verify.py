"""Exact audits: input conditions, pipeline invariants, finished designs.

Every check returns an AuditReport listing each violated clause with the
expected and observed integers, rather than a bare boolean, so failures are
directly actionable. All arithmetic is exact; nothing here tolerates
off-by-one answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .model import Design, Params, VertexId


@dataclass(frozen=True)
class Violation:
    check: str
    location: str
    expected: object
    actual: object

    def __str__(self) -> str:
        return f"{self.check} at {self.location}: expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class AuditReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        return "FAIL\n" + "\n".join(f"  {v}" for v in self.violations)


def check_sufficiency(params: Params) -> AuditReport:
    """The three arithmetic gates every solvable instance satisfies.

    S1: each factor degree times the part size is divisible by 3.
    S2: each factor degree times the number of vertices is even.
    S3: the factor degrees sum to the full degree of the complete design.
    """
    bad = []
    for i, ri in enumerate(params.r, start=1):
        if (ri * params.m) % 3 != 0:
            bad.append(Violation("S1", f"r[{i}]", "3 | r*m", f"{ri}*{params.m} = {ri * params.m}"))
        if (ri * params.m * params.n) % 2 != 0:
            bad.append(
                Violation("S2", f"r[{i}]", "2 | r*m*n", f"{ri}*{params.m}*{params.n} = {ri * params.m * params.n}")
            )
    total = sum(params.r)
    if total != params.total_degree:
        bad.append(Violation("S3", "sum(r)", params.total_degree, total))
    return AuditReport(tuple(bad))


def check_uniform(lam: int, m: int, n: int, r: int) -> tuple[AuditReport, int | None]:
    """Gate for the all-factors-equal case; also yields the factor count.

    (i) 3 | r*m, (ii) 2 | r*m*n, (iii) r divides the complete design's
    degree. When all three hold the factor count k is that degree over r.
    """
    if lam < 1 or m < 1 or n < 2 or r < 1:
        raise ValueError("need lam >= 1, m >= 1, n >= 2, r >= 1")
    total = 3 * lam * (n - 1) * comb(m, 2)
    bad = []
    if (r * m) % 3 != 0:
        bad.append(Violation("(i)", "r", "3 | r*m", f"{r}*{m} = {r * m}"))
    if (r * m * n) % 2 != 0:
        bad.append(Violation("(ii)", "r", "2 | r*m*n", f"{r}*{m}*{n} = {r * m * n}"))
    if total % r != 0:
        bad.append(Violation("(iii)", "r", f"{r} | {total}", f"{total} % {r} = {total % r}"))
    report = AuditReport(tuple(bad))
    return report, (total // r if report.passed else None)


def _expected_pair_mult(design: Design, u: VertexId, v: VertexId) -> int:
    lam = design.params.lam
    return lam * comb(design.weights[u], 2) * design.weights[v]


def _expected_triple_mult(design: Design, u: VertexId, v: VertexId, w: VertexId) -> int:
    lam = design.params.lam
    return lam * design.weights[u] * design.weights[v] * design.weights[w]


def _pair_plus_one(u: VertexId, v: VertexId, w: VertexId):
    """If exactly two of the sorted triple share a part, return (pair, other)."""
    if u.part == v.part != w.part:
        return (u, v), w
    if v.part == w.part != u.part:
        return (v, w), u
    # sorted triples group same parts together, so u/w sharing means v does too
    return None


def verify_c1_c4(design: Design) -> AuditReport:
    """Full audit of an amalgamated state, weighted shapes included.

    Edges take exactly one shape: a pair from one part plus a vertex from
    another. C1: weights in each part sum to the part size m. C2: the pair
    collapsed to a doubled vertex u with outside vertex v appears exactly
    lam * C(g(u), 2) * g(v) times. C3: a pair of distinct same-part
    vertices u, v with outside vertex w appears exactly
    lam * g(u) * g(v) * g(w) times. C4: vertex u has degree r_i * g(u) in
    every color i, occurrences counted with multiplicity. Every other
    triple shape, including those meeting three parts or confined to one,
    must have multiplicity 0.
    """
    p = design.params
    bad = []

    for part in range(1, p.n + 1):
        s = sum(design.weights[v] for v in design.parts[part])
        if s != p.m:
            bad.append(Violation("C1", f"part {part}", p.m, s))

    # Every conceivable triple over the current vertex set, by shape.
    vs = design.vertices
    for u in vs:
        for v in vs:
            if u == v:
                continue
            expected = _expected_pair_mult(design, u, v) if u.part != v.part else 0
            actual = design.multiplicity((u, u, v))
            if actual != expected:
                bad.append(Violation("C2", f"{{{u.label()}^2, {v.label()}}}", expected, actual))
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            for c in range(b + 1, len(vs)):
                u, v, w = vs[a], vs[b], vs[c]
                split = _pair_plus_one(u, v, w)
                if split is None:
                    expected = 0
                else:
                    (x, y), z = split
                    expected = _expected_triple_mult(design, x, y, z)
                actual = design.multiplicity((u, v, w))
                if actual != expected:
                    bad.append(
                        Violation("C3", f"{{{u.label()}, {v.label()}, {w.label()}}}", expected, actual)
                    )
    for u in vs:
        if design.multiplicity((u, u, u)) != 0:
            bad.append(Violation("C3", f"{{{u.label()}^3}}", 0, design.multiplicity((u, u, u))))

    for u in vs:
        for i, ri in enumerate(p.r, start=1):
            expected = ri * design.weights[u]
            actual = design.degree(u, color=i)
            if actual != expected:
                bad.append(Violation("C4", f"{u.label()} color {i}", expected, actual))

    return AuditReport(tuple(bad))


def verify_factorization(design: Design) -> AuditReport:
    """Audit a claimed finished factorization, from scratch.

    Checks: all weights are 1; each part has exactly m vertices; every
    triple of a distinct same-part pair plus an outside vertex appears
    exactly lam times and every other triple shape not at all; every
    vertex has degree r_i in color i.
    """
    p = design.params
    bad = []

    for v in design.vertices:
        if design.weights[v] != 1:
            bad.append(Violation("weights", v.label(), 1, design.weights[v]))
    for part in range(1, p.n + 1):
        size = len(design.parts.get(part, ()))
        if size != p.m:
            bad.append(Violation("part-size", f"part {part}", p.m, size))
    if bad:
        # Degree targets below assume the full vertex set; stop early.
        return AuditReport(tuple(bad))

    vs = design.vertices
    for u in vs:
        for v in vs:
            if u != v and design.multiplicity((u, u, v)) != 0:
                bad.append(Violation("no-doubled", f"{{{u.label()}^2, {v.label()}}}", 0, design.multiplicity((u, u, v))))
        if design.multiplicity((u, u, u)) != 0:
            bad.append(Violation("no-doubled", f"{{{u.label()}^3}}", 0, design.multiplicity((u, u, u))))
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            for c in range(b + 1, len(vs)):
                u, v, w = vs[a], vs[b], vs[c]
                expected = p.lam if _pair_plus_one(u, v, w) else 0
                actual = design.multiplicity((u, v, w))
                if actual != expected:
                    bad.append(
                        Violation("lambda-fold", f"{{{u.label()}, {v.label()}, {w.label()}}}", expected, actual)
                    )

    for u in vs:
        for i, ri in enumerate(p.r, start=1):
            actual = design.degree(u, color=i)
            if actual != ri:
                bad.append(Violation("regular", f"{u.label()} color {i}", ri, actual))

    return AuditReport(tuple(bad))


def degree_multipartite(sizes, p: int) -> int:
    """Degree of any vertex of part p in the unweighted complete design
    with the given (possibly unequal) part sizes. 1-based p."""
    sizes = tuple(sizes)
    if not (1 <= p <= len(sizes)):
        raise ValueError(f"part {p} outside 1..{len(sizes)}")
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need at least 2 parts, all nonempty")
    mp = sizes[p - 1]
    others = [s for i, s in enumerate(sizes, start=1) if i != p]
    # Pairs fully outside p, plus a doubled-or-distinct pair meeting p.
    return sum(comb(s, 2) for s in others) + (mp - 1) * sum(others)


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    witness: tuple[int, int] | None = None


def check_regularity_necessity(sizes) -> RegularityResult:
    """Is the complete design over these part sizes regular?

    Compares part degrees directly; returns the first part pair whose
    degrees differ, scanning in ascending order. Equal part sizes are
    always regular, but so is the two-part instance with sizes (1, 2).
    """
    sizes = tuple(sizes)
    degs = [degree_multipartite(sizes, p) for p in range(1, len(sizes) + 1)]
    for a in range(len(degs)):
        for b in range(a + 1, len(degs)):
            if degs[a] != degs[b]:
                return RegularityResult(False, (a + 1, b + 1))
    return RegularityResult(True, None)
