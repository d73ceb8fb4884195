import pytest

from trifactor.errors import ConditionError
from trifactor.model import Params
from trifactor.pipeline import construct_design, uniform_params
from trifactor.verify import verify_factorization


def test_construct_passes_audit():
    for params in [
        Params(1, 2, 2, (3,)),
        Params(1, 3, 2, (1, 2, 3, 3)),
        Params(2, 2, 3, (6, 6)),
        Params(1, 2, 4, (3, 6)),
    ]:
        d = construct_design(params)
        assert verify_factorization(d).passed
        assert d.edge_count() == params.complete_edge_count
        assert d.order == params.m * params.n


def test_construct_rejects_failing_gate():
    with pytest.raises(ConditionError):
        construct_design(Params(1, 2, 2, (1, 1, 1)))
    with pytest.raises(ConditionError):
        construct_design(Params(1, 3, 3, (9, 9)))


def test_uniform_params_derives_count():
    p = uniform_params(1, 3, 2, 1)
    assert p.k == 9 and p.r == (1,) * 9
    with pytest.raises(ConditionError):
        uniform_params(1, 4, 3, 2)


def test_construction_is_deterministic():
    a = construct_design(Params(1, 3, 2, (3, 6)))
    b = construct_design(Params(1, 3, 2, (3, 6)))
    assert a == b
    assert [e.verts for e in a.edges] == [e.verts for e in b.edges]


def test_trace_mode_matches_untraced():
    p = Params(2, 2, 3, (6, 6))
    assert construct_design(p, check_each_step=True) == construct_design(p)
