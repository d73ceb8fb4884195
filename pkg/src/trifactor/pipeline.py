"""End-to-end construction: gate, seed, detach, audit."""

from __future__ import annotations

from .base import build_base
from .detach import detach_all
from .errors import ConditionError, InternalDefectError
from .model import Design, Params
from .verify import check_uniform, verify_factorization


def construct_design(params: Params, check_each_step: bool = False) -> Design:
    """Build a complete factorization for a gated instance.

    Raises ConditionError when the instance fails the arithmetic gate, and
    InternalDefectError if the construction ever disagrees with its own
    audits. The returned design always passes verify_factorization; that
    audit runs unconditionally before returning.
    """
    base = build_base(params)
    final = detach_all(base, check_each_step=check_each_step)
    report = verify_factorization(final)
    if not report.passed:
        raise InternalDefectError(f"finished design failed its audit: {report}")
    if final.edge_count() != params.complete_edge_count:
        raise InternalDefectError(
            f"finished design has {final.edge_count()} edges, wanted {params.complete_edge_count}"
        )
    return final


def uniform_params(lam: int, m: int, n: int, r: int) -> Params:
    """Parameters for the all-factors-equal case, deriving the factor count.

    Raises ConditionError when the uniform gate fails.
    """
    report, k = check_uniform(lam, m, n, r)
    if not report.passed:
        raise ConditionError(report)
    return Params(lam, m, n, (r,) * k)
