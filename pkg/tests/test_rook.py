import json
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partial_permutations
from diagramma.combinatorics import bell, partitions_up_to, vacillating_count
from diagramma.exactlinalg import mat_mul
from diagramma.reps import rook_simple_module
from diagramma.rook import (
    GrothendieckVector,
    bratteli_emit,
    compose,
    decompose_by_character,
    diagonal_idempotent,
    direct_sum,
    enumerate_rook,
    g_functor_gv,
    induce_gv,
    induce_hat_gv,
    is_partial_permutation,
    iterate_ind_res,
    natural_module,
    parse_bratteli_json,
    permutation_matrix,
    restrict_gv,
    rook_generators,
    rook_identity,
    simple,
    tensor_modules,
    tensor_power,
    trivial_module,
)
from diagramma.wbimodule import w_left_module


def gv(n, pairs):
    return GrothendieckVector(n, dict(pairs))


def test_rook_sizes(oracles):
    for n, size in oracles["rook_sizes"].items():
        n = int(n)
        R = enumerate_rook(n)
        assert len(R) == size == sum(comb(n, i) ** 2 * factorial(i) for i in range(n + 1))
        assert len(set(R)) == len(R)
        assert all(is_partial_permutation(a, n) for a in R)
    assert len(enumerate_rook(2)) == 7


@given(partial_permutations(4), partial_permutations(4), partial_permutations(4))
def test_composition_is_matrix_product(a, b, c):
    assert permutation_matrix(compose(a, b)) == mat_mul(permutation_matrix(a), permutation_matrix(b))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(rook_identity(4), a) == a == compose(a, rook_identity(4))


def test_diagonal_idempotents():
    for i in range(4):
        for j in range(4):
            assert compose(diagonal_idempotent(3, i), diagonal_idempotent(3, j)) == diagonal_idempotent(3, min(i, j))


def test_size_mismatch():
    with pytest.raises(ValueError):
        compose((1, 2), (1,))
    assert not is_partial_permutation((1, 1))


def test_generators_generate():
    for n in range(1, 4):
        seen = {rook_identity(n)}
        frontier = list(seen)
        gens = rook_generators(n)
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
        assert seen == set(enumerate_rook(n))


# -- branching -------------------------------------------------------------------


def test_restriction_examples():
    assert restrict_gv(gv(5, {(2, 1): 1})) == gv(4, {(2, 1): 1, (2,): 1, (1, 1): 1})
    assert restrict_gv(gv(3, {(): 1})) == gv(2, {(): 1})
    assert restrict_gv(gv(1, {(1,): 1})) == gv(0, {(): 1})
    with pytest.raises(ValueError):
        restrict_gv(gv(0, {(): 1}))


def test_induction_examples():
    assert induce_gv(gv(0, {(): 1})) == gv(1, {(): 1, (1,): 1})
    assert induce_hat_gv(gv(1, {(1,): 1})) == gv(2, {(2,): 1, (1, 1): 1})


vectors = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.dictionaries(st.sampled_from(partitions_up_to(n)), st.integers(0, 3), max_size=5)))


@given(vectors)
def test_induction_splits(arg):
    n, mult = arg
    v = gv(n, mult)
    assert induce_gv(v) == induce_hat_gv(v) + g_functor_gv(v)


def test_iterated_tower():
    assert iterate_ind_res(1, 3)[-1] == gv(3, {(): 1, (1,): 1})
    assert iterate_ind_res(2, 2)[-1] == gv(2, {(): 2, (1,): 3, (2,): 1, (1, 1): 1})
    assert iterate_ind_res(3, 3)[-1] == gv(3, {(): 5, (1,): 10, (2,): 6, (1, 1): 6, (3,): 1, (2, 1): 2, (1, 1, 1): 1})
    assert len(iterate_ind_res(3, 3)) == 7


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_tower_squares_and_lengths(k):
    final = iterate_ind_res(k, k)[-1]
    assert final.sum_of_squares() == bell(2 * k)
    for lam in partitions_up_to(k):
        assert final.mult.get(lam, 0) == vacillating_count(k, lam)


# -- explicit modules ------------------------------------------------------------


def test_decompose_simple_modules():
    for n in range(4):
        for lam in partitions_up_to(n):
            assert decompose_by_character(rook_simple_module(n, lam), n) == simple(n, lam)


def test_natural_squared():
    n = 2
    got = decompose_by_character(tensor_modules(natural_module(n), natural_module(n)), n)
    # tensoring with C^n is Ind-hat after Res, applied twice to R_n^(1)
    once = induce_hat_gv(restrict_gv(simple(n, ())))
    assert once == simple(n, (1,))
    assert got == induce_hat_gv(restrict_gv(once))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tensoring_with_natural_is_ind_hat_res(n):
    for lam in partitions_up_to(n):
        M = rook_simple_module(n, lam)
        lhs = decompose_by_character(tensor_modules(M, natural_module(n)), n)
        assert lhs == induce_hat_gv(restrict_gv(simple(n, lam)))


def _g_res(n, i):
    return g_functor_gv(restrict_gv(decompose_by_character(tensor_power(natural_module(n), i, n), n)))


def _shifted(n, i):
    return decompose_by_character(tensor_power(direct_sum(natural_module(n), trivial_module(n)), i, n), n)


@pytest.mark.parametrize("n,i", [(n, i) for n in range(1, 4) for i in range(4) if n > i])
def test_g_res_of_tensor_powers(n, i):
    assert _g_res(n, i) == _shifted(n, i)


def test_g_res_identity_needs_n_above_i():
    # at n = i the top simple R_n^(1^n) restricts without a stable copy
    assert _g_res(1, 1) == gv(1, {(): 1})
    assert _shifted(1, 1) == gv(1, {(): 1, (1,): 1})


def test_w_module_decomposition():
    assert decompose_by_character(w_left_module(2, 2), 2) == iterate_ind_res(2, 2)[-1]


# -- Bratteli output -------------------------------------------------------------


def test_bratteli_dot_k1():
    dot = bratteli_emit(1, 3, "dot")
    assert dot.count("subgraph") == 3
    assert 's2_1 [label="[1] (1)"]' in dot
    assert 's2_e [label="[] (1)"]' in dot


def test_bratteli_json_roundtrip():
    for k, n in [(1, 1), (2, 3), (3, 3)]:
        text = bratteli_emit(k, n, "json")
        assert parse_bratteli_json(text) == iterate_ind_res(k, n)
        data = json.loads(text)
        assert [lvl["kind"] for lvl in data["levels"]] == ["init"] + ["res", "ind"] * k
    with pytest.raises(ValueError):
        bratteli_emit(1, 1, "svg")


def test_grothendieck_vector_rules():
    with pytest.raises(ValueError):
        gv(1, {(2,): 1})
    with pytest.raises(ValueError):
        gv(2, {(1,): -1})
    v = gv(3, {(1,): 2, (): 1})
    assert v.dim() == 2 * 3 + 1
    assert str(v) == "R_3{[]: 1, [1]: 2}"
    assert hash(v) == hash(gv(3, {(): 1, (1,): 2, (2,): 0}))
