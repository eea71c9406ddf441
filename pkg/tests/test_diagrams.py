from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import diagram_pairs, diagrams
from diagramma.combinatorics import bell, compositions_of, stirling2
from diagramma.diagrams import (
    Diagram,
    MuInvariantDatum,
    bottom,
    compose,
    d_mu,
    d_mu_X_xi,
    e1,
    enumerate_diagrams,
    enumerate_dual,
    enumerate_K,
    enumerate_L,
    enumerate_N,
    enumerate_V,
    epsilon,
    eta,
    format_diagram,
    gamma,
    hconcat,
    identity,
    mu_invariant_data,
    mu_invariant_partitions,
    parse_diagram,
    rank,
    restrict,
    sigma_mu,
    top,
    vconcat,
)

EX = "[7;4] 1,3',4' | 2,3,4,1' | 2' | 5,6,7"

# two diagrams of A_7 whose stack closes two loops in the middle row
LOOP_D1 = Diagram.from_blocks(7, 7, [[1, 2, 3, -1, -2, -3], [4, 5], [-4, -5], [6], [-6], [7, -7]])
LOOP_D2 = Diagram.from_blocks(7, 7, [[1, 2, -1], [3, -2, -3], [4, 5], [6], [7, -6, -7], [-4], [-5]])


def test_parse_seven_by_four():
    d = parse_diagram(EX)
    assert (d.k, d.l) == (7, 4)
    assert sorted(map(sorted, d.vertex_blocks())) == sorted(
        map(sorted, [[1, -3, -4], [2, 3, 4, -1], [-2], [5, 6, 7]]))
    assert top(d) == ((1,), (2, 3, 4), (5, 6, 7))
    assert bottom(d) == ((1,), (2,), (3, 4))
    assert rank(d) == 2


def test_identity_strand():
    assert parse_diagram("[1;1] 1,1'") == identity(1) == gamma(1)


@pytest.mark.parametrize("bad", [
    "1,1'", "[2;2] 1,1' | 2", "[1;1] 1,1' | 1", "[1;1] 1,2'", "[1;1] 1,x'", "[1;1] 1,1' |",
])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_diagram(bad)


@given(diagrams(max_k=5))
def test_format_parse_roundtrip(d):
    assert parse_diagram(format_diagram(d)) == d


def test_format_is_canonical():
    assert format_diagram(parse_diagram("[2;2] 2',2 | 1',1")) == "[2;2] 1,1' | 2,2'"


def test_enumeration_counts(oracles):
    for k, count in oracles["num_diagrams"].items():
        A = enumerate_diagrams(int(k))
        assert len(A) == count == bell(2 * int(k))
        assert len(set(A)) == len(A)
    assert len(enumerate_diagrams(4)) == bell(8)


def test_composite_closes_two_loops():
    comp, c = vconcat(LOOP_D1, LOOP_D2)
    assert c == 2
    expected = Diagram.from_blocks(7, 7, [[1, 2, 3, -1, -2, -3], [4, 5], [6], [7, -6, -7], [-4], [-5]])
    assert comp == expected


@given(diagrams(max_k=5))
def test_identity_is_neutral(d):
    assert vconcat(identity(d.k), d) == (d, 0)
    assert vconcat(d, identity(d.k)) == (d, 0)


def test_vconcat_size_mismatch():
    with pytest.raises(ValueError):
        vconcat(identity(2), identity(3))


def test_vconcat_associative_exhaustive():
    for k in (1, 2):
        A = enumerate_diagrams(k)
        for a, b, c in product(A, repeat=3):
            ab, c1 = vconcat(a, b)
            left, c2 = vconcat(ab, c)
            bc, c3 = vconcat(b, c)
            right, c4 = vconcat(a, bc)
            assert left == right
            assert c1 + c2 == c3 + c4


@given(diagram_pairs(max_k=5))
def test_rank_decreases_under_composition(pair):
    a, b = pair
    assert rank(compose(a, b)) <= min(rank(a), rank(b))


@given(diagram_pairs(max_k=3), diagram_pairs(max_k=3))
def test_interchange_law(p, q):
    a, c = p
    b, d = q
    ab_cd, n1 = vconcat(hconcat(a, b), hconcat(c, d))
    ac, n2 = vconcat(a, c)
    bd, n3 = vconcat(b, d)
    assert ab_cd == hconcat(ac, bd)
    assert n1 == n2 + n3


@given(diagrams(max_k=3), diagrams(max_k=3))
def test_hconcat_rank_adds(a, b):
    assert rank(hconcat(a, b)) == rank(a) + rank(b)
    assert hconcat(a, identity(0)) == a


def test_gamma_tensor():
    g = hconcat(gamma(2), gamma(3))
    assert g == Diagram.from_permutation((2, 1, 4, 5, 3))


def test_from_permutation_reverses_composition():
    for p, q in product(permutations(range(1, 4)), repeat=2):
        pq = tuple(p[q[j] - 1] for j in range(3))
        assert compose(Diagram.from_permutation(q), Diagram.from_permutation(p)) == Diagram.from_permutation(pq)


def test_named_diagrams():
    assert d_mu(3, (2,)) == Diagram.from_blocks(3, 3, [[1, -2], [2, -1], [3], [-3]])
    assert epsilon(3, 2) == Diagram.from_blocks(3, 3, [[1, -1], [2, 3, -2, -3]])
    assert e1() == Diagram.from_blocks(1, 1, [[1], [-1]])
    assert d_mu(2, ()) == hconcat(e1(), e1())
    with pytest.raises(ValueError):
        d_mu(2, (2, 1))


def test_V_and_N():
    assert enumerate_V(1, 0) == (e1(),)
    assert len(enumerate_N(2, 1)) == 3
    for k in range(5):
        for i in range(k + 1):
            V, N = enumerate_V(k, i), enumerate_N(k, i)
            assert len(V) == len(N) * factorial(i)
            assert set(N) <= set(V)
            assert len(N) == sum(comb(k, r) * stirling2(r, i) * bell(k - r) for r in range(k + 1))
            for d in V:
                assert rank(d) == i
                assert bottom(d)[: i] == tuple((j,) for j in range(1, i + 1))


def test_V_matches_brute_force():
    for k in range(4):
        for i in range(k + 1):
            brute = set()
            for d in enumerate_diagrams(k):
                blocks = d.blocks()
                bots = [b for _, b in blocks if b]
                if rank(d) != i or any(len(b) > 1 for b in bots):
                    continue
                if all(any(j in b and t for t, b in blocks) for j in range(1, i + 1)):
                    brute.add(d)
            assert brute == set(enumerate_V(k, i))


def test_dual_family():
    assert len(enumerate_dual(2)) == 3
    for k in range(5):
        brute = {d for d in enumerate_diagrams(k) if all(t and b for t, b in d.blocks())}
        assert brute == set(enumerate_dual(k))
        for i in range(1, k + 1):
            L = enumerate_L(k, i)
            assert epsilon(k, i) in L
            assert set(enumerate_K(k, i)) <= set(L)
            for d in L:
                assert rank(d) == i
                assert bottom(d) == tuple((j,) for j in range(1, i)) + (tuple(range(i, k + 1)),)
        if k:
            assert set(enumerate_L(k, k)) == {Diagram.from_permutation(p) for p in permutations(range(1, k + 1))}


def test_sigma_mu():
    assert sigma_mu((2, 4)) == (2, 1, 4, 5, 6, 3)


def test_eta_examples():
    d = MuInvariantDatum(xi=((1, 2),), f=(2,), g=(1, 1))
    assert eta((2, 4), d) == ((1, 3, 5), (2, 4, 6))
    d = MuInvariantDatum(xi=((1, 2),), f=(2,), g=(1, 2))
    assert eta((2, 4), d) == ((1, 4, 6), (2, 3, 5))


def test_eta_rejects_bad_data():
    with pytest.raises(ValueError):
        eta((2, 3), MuInvariantDatum(xi=((1, 2),), f=(2,), g=(1, 1)))
    with pytest.raises(ValueError):
        eta((2, 4), MuInvariantDatum(xi=((1, 2),), f=(2,), g=(2, 1)))


@pytest.mark.parametrize("mu", [mu for m in range(1, 7) for mu in compositions_of(m)])
def test_eta_is_a_bijection(mu):
    images = [eta(mu, datum) for datum in mu_invariant_data(mu)]
    assert len(set(images)) == len(images)
    assert set(images) == set(mu_invariant_partitions(sum(mu), mu))


def test_d_mu_X_xi_on_twelve_strands():
    mu = (2, 3, 1, 2, 2)
    got = d_mu_X_xi(12, mu, {1, 2, 6, 7, 8}, [[1, 2], [6], [7, 8]])
    expected = Diagram.from_blocks(12, 12, [
        [1, 2, -1, -2], [3, -4], [4, -5], [5, -3], [6, -6], [7, 8, -7, -8],
        [9, -10], [10, -9], [11], [12], [-11], [-12]])
    assert got == expected
    assert d_mu_X_xi(5, (2, 3), set(), []) == d_mu(5, (2, 3))
    with pytest.raises(ValueError):
        d_mu_X_xi(5, (2, 3), {1}, [[1]])


@given(diagrams(max_k=4), st.data())
def test_restrict_keeps_chosen_strands(d, data):
    keep = sorted(data.draw(st.sets(st.integers(1, d.k), max_size=d.k)) if d.k else [])
    r = restrict(d, keep)
    assert (r.k, r.l) == (len(keep), len(keep))
    assert restrict(d, range(1, d.k + 1)) == d
