import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import diagrams, partial_permutations, w_vectors
from diagramma.combinatorics import bell, compositions_of, generalized_bell, partitions_up_to, syt_count, vacillating_count
from diagramma.diagrams import Diagram, d_mu, e1, enumerate_diagrams, identity, swap_rows, tensor, vconcat
from diagramma.exactlinalg import DELTA, DeltaScalar, commutant_dimension, identity as eye, mat_mul, mat_scale
from diagramma.reps import rook_simple_module, standard_module, trace_of
from diagramma.rook import (
    GrothendieckVector,
    decompose_by_character,
    diagonal_idempotent,
    enumerate_rook,
    iterate_ind_res,
    natural_module,
    rook_identity,
    tensor_power,
)
from diagramma.wbimodule import (
    RestrictedSetPartition,
    WBasisVector,
    act_left,
    act_right,
    act_right_raw,
    bar_diagram,
    bitrace,
    decompose_w,
    from_restricted,
    image_rank,
    phi_k_tensor,
    phi_matrix,
    restricted_partitions,
    tensor_image_rank,
    to_restricted,
    w_basis,
    w_commutant_dim,
    w_left_module,
)

W = WBasisVector
SEVEN_X = W(7, 4, (2, 2, 2, 0, 0, 1, 0), ((4, 5), (7,)))
SEVEN_D = Diagram.from_blocks(7, 7, [[1, 2, -1], [3, -2, -3], [4, 5], [6, -6, -7], [7], [-4], [-5]])


def test_basis_sizes(oracles):
    assert len(w_basis(2, 2)) == 10
    assert len(w_basis(3, 4)) == 141
    for n in range(1, 5):
        assert len(w_basis(1, n)) == n + 1
    for key, count in oracles["restricted_counts"].items():
        n, k = map(int, key.split(","))
        if n >= 1 and k >= 1:
            assert len(w_basis(k, n)) == count
            assert len(set(w_basis(k, n))) == count


@pytest.mark.parametrize("k,n", [(k, n) for k in range(1, 5) for n in range(1, 5)])
def test_dimension_formula(k, n):
    lams = [lam for lam in partitions_up_to(k) if sum(lam) <= n]
    via_g = sum(vacillating_count(k, lam) * syt_count(lam) * comb(n, sum(lam)) for lam in lams)
    direct = sum(comb(k, i) * bell(k - i) * n**i for i in range(k + 1))
    assert generalized_bell(n, k) == via_g == direct


def test_vector_validation():
    with pytest.raises(ValueError):
        W(2, 1, (0, 1), ())
    with pytest.raises(ValueError):
        W(1, 1, (2,), ())
    with pytest.raises(ValueError):
        RestrictedSetPartition(2, 1, ((1, 2), (3,)))


def test_restricted_examples():
    assert from_restricted(RestrictedSetPartition(1, 1, ((1,), (2,)))) == W(1, 1, (0,), ((1,),))
    assert from_restricted(RestrictedSetPartition(1, 1, ((1, 2),))) == W(1, 1, (1,), ())


@pytest.mark.parametrize("k,n", [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_restricted_bijection(k, n):
    parts = list(restricted_partitions(n, k))
    assert len(parts) == generalized_bell(n, k)
    images = [from_restricted(p) for p in parts]
    assert [to_restricted(x) for x in images] == parts
    assert set(images) == set(w_basis(k, n))


def test_bar_diagram_example():
    expected = Diagram.from_blocks(7, 7, [[1, 2, 3, -1, -2, -3], [6, -6], [4, 5], [-4, -5], [7], [-7]])
    assert bar_diagram(SEVEN_X) == expected
    x = W(3, 2, (0, 0, 0), ((1,), (2,), (3,)))
    assert bar_diagram(x) == tensor(e1(), e1(), e1())


@given(st.integers(1, 4).flatmap(lambda k: w_vectors(k, 3)))
def test_bar_diagram_is_symmetric(x):
    assert swap_rows(bar_diagram(x)) == bar_diagram(x)


def test_action_on_seven_strands():
    c, y = act_right_raw(SEVEN_X, SEVEN_D)
    assert y.word == (2, 2, 2, 0, 0, 1, 1)
    assert y.zeroparts == ((4,), (5,))
    # two closed middle loops: {4,5} and {7}
    assert c == 2
    assert act_right(SEVEN_X, SEVEN_D) == (DELTA**2, y)


def test_identity_acts_trivially():
    for x in w_basis(2, 2):
        assert act_right(x, identity(2)) == (1, x)
        assert act_left(rook_identity(2), x) == x


def test_joining_two_letters_kills():
    x = W(2, 2, (1, 2), ())
    joiner = Diagram.from_blocks(2, 2, [[1, 2, -1, -2]])
    assert act_right(x, joiner) is None
    # a letter joined to a zero part survives; the refinement reading kills it
    y = W(2, 2, (1, 0), ((2,),))
    assert act_right(y, joiner) == (1, W(2, 2, (1, 1), ()))
    assert act_right_raw(y, joiner, refine=True) is None


def _compose_right(x, d1, d2):
    first = act_right(x, d1)
    if first is None:
        return None
    second = act_right(first[1], d2)
    return None if second is None else (first[0] * second[0], second[1])


def _whole(x, d1, d2):
    e, c = vconcat(d1, d2)
    hit = act_right(x, e)
    return None if hit is None else (hit[0] * DeltaScalar.monomial(c), hit[1])


def test_right_action_is_associative_k2():
    A = enumerate_diagrams(2)
    for x, d1, d2 in product(w_basis(2, 2), A, A):
        assert _compose_right(x, d1, d2) == _whole(x, d1, d2)


def test_right_action_is_associative_k3_sample():
    rng = random.Random(5)
    A, basis = enumerate_diagrams(3), w_basis(3, 3)
    for _ in range(500):
        x, d1, d2 = rng.choice(basis), rng.choice(A), rng.choice(A)
        assert _compose_right(x, d1, d2) == _whole(x, d1, d2)


def test_literal_refinement_reading_is_not_associative():
    x = W(2, 2, (0, 0), ((1, 2),))
    d1 = Diagram.from_blocks(2, 2, [[1, 2, -1], [-2]])
    d2 = Diagram.from_blocks(2, 2, [[1, 2, -1, -2]])
    first = act_right_raw(x, d1, refine=True)
    assert first is not None
    assert act_right_raw(first[1], d2, refine=True) is None
    assert act_right_raw(x, vconcat(d1, d2)[0], refine=True) is not None


def test_actions_commute_k2():
    A = enumerate_diagrams(2)
    for sigma, x, d in product(enumerate_rook(2), w_basis(2, 2), A):
        xd = act_right(x, d)
        lhs = None
        if xd is not None:
            y = act_left(sigma, xd[1])
            lhs = None if y is None else (xd[0], y)
        sx = act_left(sigma, x)
        rhs = None if sx is None else act_right(sx, d)
        assert lhs == rhs


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(w_vectors(k, 3), diagrams(k=k))), partial_permutations(3))
def test_actions_commute_random(xd, sigma):
    x, d = xd
    hit = act_right(x, d)
    lhs = None if hit is None or act_left(sigma, hit[1]) is None else (hit[0], act_left(sigma, hit[1]))
    sx = act_left(sigma, x)
    assert lhs == (None if sx is None else act_right(sx, d))


def test_left_action_examples():
    x = W(3, 3, (1, 3, 0), ((3,),))
    assert act_left(diagonal_idempotent(3, 2), x) is None
    assert act_left((2, 3, 1), x) == W(3, 3, (2, 1, 0), ((3,),))


@given(partial_permutations(3), partial_permutations(3))
def test_left_module_is_multiplicative(a, b):
    rep = w_left_module(2, 3)
    ab = tuple(a[x - 1] if x else 0 for x in b)
    assert rep.act(ab) == mat_mul(rep.act(a), rep.act(b))


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_decomposition_matches_tensor_powers(k, n):
    lhs = decompose_w(k, n)
    rhs = GrothendieckVector(n, {})
    for i in range(k + 1):
        v = decompose_by_character(tensor_power(natural_module(n), i, n), n)
        rhs = rhs + GrothendieckVector(n, {p: m * comb(k, i) * bell(k - i) for p, m in v.mult.items()})
    assert lhs == rhs
    if n >= k:
        assert lhs == iterate_ind_res(k, n)[-1]


def test_decomposition_examples():
    assert decompose_w(2, 2) == GrothendieckVector(2, {(): 2, (1,): 3, (2,): 1, (1, 1): 1})
    assert decompose_w(1, 1) == GrothendieckVector(1, {(): 1, (1,): 1})
    assert decompose_w(3, 3) == iterate_ind_res(3, 3)[-1]


def test_bitrace_of_identity_is_dimension():
    for k, n in [(1, 1), (2, 2), (2, 3), (3, 2)]:
        assert bitrace(rook_identity(n), identity(k), n) == generalized_bell(n, k)


def test_bitrace_two_paths():
    k, n = 2, 2
    d = tensor(e1(), e1())
    direct = DeltaScalar()
    for x in w_basis(k, n):
        hit = act_right(x, d)
        if hit and hit[1] == x:
            direct = direct + hit[0]
    assert bitrace(rook_identity(n), d, n) == direct
    m = phi_matrix(d, k, n)
    assert direct == sum((m[i][i] for i in range(len(m))), DeltaScalar())


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_bitrace_factorizes(k, n):
    lams = partitions_up_to(min(k, n))
    R = {lam: rook_simple_module(n, lam) for lam in lams}
    P = {lam: standard_module(k, lam) for lam in lams}
    for m in range(k + 1):
        for mu in compositions_of(m):
            dm = d_mu(k, mu)
            for sigma in enumerate_rook(n):
                rhs = DeltaScalar()
                for lam in lams:
                    rhs = rhs + trace_of(R[lam], sigma) * trace_of(P[lam], dm)
                assert bitrace(sigma, dm, n) == rhs


def test_phi_matrix_is_multiplicative():
    A = enumerate_diagrams(2)
    for d1, d2 in product(A, repeat=2):
        e, c = vconcat(d1, d2)
        assert mat_mul(phi_matrix(d1, 2, 2), phi_matrix(d2, 2, 2)) == mat_scale(DELTA**c, phi_matrix(e, 2, 2))


def test_phi_k1():
    q = Fraction(3)
    d1 = e1()
    d2 = identity(1)
    basis = w_basis(1, 2)
    m1 = phi_matrix(d1, 1, 2, q)
    z = basis.index(W(1, 2, (0,), ((1,),)))
    assert m1[z][z] == q
    assert sum(abs(x) for row in m1 for x in row) == q
    assert phi_matrix(d2, 1, 2, q) == eye(len(basis))


def test_image_rank_matches_oracle(oracles):
    for key, r in oracles["image_rank"].items():
        k, n, q = map(int, key.split(","))
        assert image_rank(k, n, Fraction(q)) == r


def test_commutant_matches_oracle(oracles):
    for key, c in oracles["commutant_dim"].items():
        k, n = map(int, key.split(","))
        assert w_commutant_dim(k, n) == c


def test_commutant_from_generators_equals_full_monoid():
    rep = w_left_module(2, 2)
    full = commutant_dimension([rep.act(s) for s in enumerate_rook(2)])
    assert full == w_commutant_dim(2, 2) == 15


@pytest.mark.parametrize("k", [1, 2, 3])
def test_commutant_is_bell_for_large_n(k):
    assert w_commutant_dim(k, k) == bell(2 * k)


@pytest.mark.parametrize("q,full", [(0, False), (1, False), (2, False), (5, True), (Fraction(7, 2), True), (-1, True)])
def test_surjectivity_k2(q, full):
    for n in (2, 3):
        assert (image_rank(2, n, Fraction(q)) == w_commutant_dim(2, n)) is full


# -- classical tensor-space action ------------------------------------------------


def test_phi_tensor_examples():
    assert phi_k_tensor(e1(), 1, 2) == [[1, 1], [1, 1]]
    assert phi_k_tensor(identity(2), 2, 3) == eye(9)
    assert tensor_image_rank(1, 2) == 2


@pytest.mark.parametrize("k", [1, 2])
def test_phi_tensor_is_multiplicative(k):
    n = 4
    for d1, d2 in product(enumerate_diagrams(k), repeat=2):
        e, c = vconcat(d1, d2)
        lhs = mat_mul(phi_k_tensor(d1, k, n), phi_k_tensor(d2, k, n))
        assert lhs == mat_scale(n**c, phi_k_tensor(e, k, n))
