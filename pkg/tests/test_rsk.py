import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import w_vectors
from diagramma.combinatorics import bell, generalized_bell
from diagramma.rsk import (
    RskTriple,
    rsk_backward,
    rsk_count_check,
    rsk_count_formula,
    rsk_forward,
    rsk_forward_vector,
    rsk_roundtrip,
)
from diagramma.wbimodule import WBasisVector, restricted_partitions, to_restricted


def test_all_zero_vector():
    t = rsk_forward_vector(WBasisVector(3, 2, (0, 0, 0), ((1, 2, 3),)))
    assert t.P == () and t.Q == ()
    assert t.T == ((1, 2, 3),)
    assert rsk_backward(RskTriple(2, 3, (), (), ((1, 2, 3),))) == to_restricted(
        WBasisVector(3, 2, (0, 0, 0), ((1, 2, 3),)))


def test_increasing_and_decreasing_words():
    t = rsk_forward_vector(WBasisVector(2, 2, (1, 2)))
    assert t.P == (((1,), (2,)),) and t.Q == ((1, 2),) and t.T == ()
    t = rsk_forward_vector(WBasisVector(2, 2, (2, 1)))
    assert t.P == (((1,),), ((2,),)) and t.Q == ((1,), (2,)) and t.T == ()


def test_blocks_compared_by_minimum():
    # letter 1 on {2,3}, letter 2 on {1}: block {1} bumps {2,3}
    t = rsk_forward_vector(WBasisVector(3, 2, (2, 1, 1)))
    assert t.P == (((1,),), ((2, 3),))
    assert t.Q == ((1,), (2,))
    assert t.to_json() == {"P": [[[1]], [[2, 3]]], "Q": [[1], [2]], "T": []}


@pytest.mark.parametrize("n,k", [(n, k) for n in range(5) for k in range(5) if n + k <= 7])
def test_forward_output_is_valid_and_reversible(n, k):
    seen = set()
    for p in restricted_partitions(n, k):
        t = rsk_forward(p)
        t.validate()
        seen.add(t)
        assert rsk_backward(t) == p
    assert len(seen) == generalized_bell(n, k)


def test_roundtrip_reports():
    assert rsk_roundtrip(2, 2) == {"n": 2, "k": 2, "count": 10, "failures": 0, "equal": True}
    assert rsk_roundtrip(3, 3)["count"] == 77


@given(st.integers(1, 5).flatmap(lambda k: w_vectors(k, 4)))
def test_roundtrip_on_random_vectors(x):
    assert rsk_backward(rsk_forward_vector(x)) == to_restricted(x)


def test_inconsistent_triples():
    with pytest.raises(ValueError):
        rsk_backward(RskTriple(2, 2, (((1,), (2,)),), ((1,), (2,)), ()))
    with pytest.raises(ValueError):
        rsk_backward(RskTriple(2, 2, (((1,),),), ((1,),), ((1, 2),)))
    with pytest.raises(ValueError):
        rsk_backward(RskTriple(2, 2, (((2,), (1,)),), ((1, 2),), ()))


def test_count_identity():
    assert rsk_count_check(2, 2, enumerate_=True) == {
        "n": 2, "k": 2, "lhs": 10, "rhs": 10, "equal": True, "enumerated": 10}
    for k in range(6):
        assert rsk_count_formula(0, k) == bell(k)
    for n in range(6):
        for k in range(6):
            assert rsk_count_check(n, k)["equal"]
