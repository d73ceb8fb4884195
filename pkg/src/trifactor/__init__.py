"""Constructive factorizations of triple systems on equal parts.

The target object: n parts of m vertices each, and lam copies of every
triple made of two distinct vertices from one part plus one vertex from
a different part. This package partitions those triples into spanning
regular layers with prescribed per-layer degrees whenever the
arithmetic conditions allow it, and audits the result exactly.
"""

from .detach import Hinge, HingeFamilies, build_hinge_families, detach_all, detach_one
from .designfile import parse_design, read_design, serialize_design, write_design
from .errors import ConditionError, InternalDefectError
from .model import Design, EdgeInstance, Params, VertexId, canonical_triple
from .pipeline import construct_design, uniform_params
from .verify import (
    AuditReport,
    RegularityResult,
    Violation,
    check_regularity_necessity,
    check_sufficiency,
    check_uniform,
    degree_multipartite,
    verify_c1_c4,
    verify_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "ConditionError",
    "Design",
    "EdgeInstance",
    "Hinge",
    "HingeFamilies",
    "InternalDefectError",
    "Params",
    "RegularityResult",
    "VertexId",
    "Violation",
    "build_hinge_families",
    "canonical_triple",
    "check_regularity_necessity",
    "check_sufficiency",
    "check_uniform",
    "construct_design",
    "degree_multipartite",
    "detach_all",
    "detach_one",
    "parse_design",
    "read_design",
    "serialize_design",
    "uniform_params",
    "verify_c1_c4",
    "verify_factorization",
    "write_design",
]
