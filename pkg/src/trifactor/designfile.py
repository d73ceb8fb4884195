"""On-disk design format: plain JSON, byte-stable, fully re-validated on read.

Only finished designs (all weights 1) are stored. Layout:

    {
      "format_version": 1,
      "lambda": 1, "m": 2, "n": 2, "r": [3],
      "vertices": [{"label": "x_1_1", "part": 1, "index": 1}, ...],
      "factors": [{"color": 1, "r": 3, "edges": [["x_1_1", "x_1_2", "x_2_1"], ...]}, ...]
    }

Factors appear in color order, each color's edges sorted, every triple in
canonical vertex order. Serializing the same design twice yields identical
bytes.
"""

from __future__ import annotations

import json

from .model import Design, EdgeInstance, Params, VertexId, canonical_triple

FORMAT_VERSION = 1


def _label_key(label: str) -> VertexId:
    parts = label.split("_")
    if len(parts) != 3 or parts[0] != "x":
        raise ValueError(f"bad vertex label {label!r}")
    try:
        return VertexId(int(parts[1]), int(parts[2]))
    except ValueError:
        raise ValueError(f"bad vertex label {label!r}") from None


def serialize_design(design: Design) -> str:
    if any(w != 1 for w in design.weights.values()):
        raise ValueError("only finished designs (all weights 1) can be serialized")
    p = design.params
    factors = []
    for color in range(1, p.k + 1):
        triples = sorted(e.verts for e in design.edges if e.color == color)
        factors.append({
            "color": color,
            "r": p.r[color - 1],
            "edges": [[v.label() for v in t] for t in triples],
        })
    doc = {
        "format_version": FORMAT_VERSION,
        "lambda": p.lam,
        "m": p.m,
        "n": p.n,
        "r": list(p.r),
        "vertices": [{"label": v.label(), "part": v.part, "index": v.index} for v in design.vertices],
        "factors": factors,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_design(text: str) -> Design:
    """Inverse of serialize_design. Raises ValueError on any malformation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    try:
        return _parse(doc)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed design file: {exc}") from None


def _parse(doc) -> Design:
    if not isinstance(doc, dict):
        raise ValueError("top level must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {doc.get('format_version')!r}")
    for key in ("lambda", "m", "n", "r", "vertices", "factors"):
        if key not in doc:
            raise ValueError(f"missing key {key!r}")

    params = Params(doc["lambda"], doc["m"], doc["n"], tuple(doc["r"]))

    vertices = []
    for rec in doc["vertices"]:
        v = VertexId(rec["part"], rec["index"])
        if rec.get("label") != v.label():
            raise ValueError(f"label {rec.get('label')!r} does not match part/index")
        vertices.append(v)
    known = set(vertices)

    edges = []
    next_id = 0
    seen_colors = []
    for factor in doc["factors"]:
        color = factor["color"]
        seen_colors.append(color)
        if not (isinstance(color, int) and 1 <= color <= params.k):
            raise ValueError(f"factor color {color!r} outside 1..{params.k}")
        if factor["r"] != params.r[color - 1]:
            raise ValueError(
                f"factor {color} declares degree {factor['r']!r}, params say {params.r[color - 1]}"
            )
        for triple in factor["edges"]:
            if len(triple) != 3:
                raise ValueError(f"edge {triple!r} does not have 3 vertices")
            vs = canonical_triple(_label_key(lbl) for lbl in triple)
            if any(v not in known for v in vs):
                raise ValueError(f"edge {triple!r} uses an unlisted vertex")
            edges.append(EdgeInstance(next_id, vs, color))
            next_id += 1
    if seen_colors != sorted(set(seen_colors)):
        raise ValueError("factors must appear once each, in color order")

    return Design(params, vertices, {v: 1 for v in vertices}, edges)


def write_design(design: Design, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_design(design))


def read_design(path) -> Design:
    with open(path) as fh:
        return parse_design(fh.read())
