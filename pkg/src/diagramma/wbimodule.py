"""The (R_n, P_k(delta))-bimodule W_{k,n}.

A basis vector is a word in the letters 0..n (letter j standing for e_j)
together with a set partition of the positions carrying 0.  R_n acts on the
letters through the natural module, P_k(delta) acts on the right through the
symmetric diagram of the vector.

Right actions use the row convention: ``phi_matrix(d)[i][j]`` is the
coefficient of basis j in ``basis[i] . d``, so that
``phi(d1) @ phi(d2) == phi(d1 d2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .combinatorics import generalized_bell, set_partitions
from .diagrams import Diagram, SetPartition, canonical_set_partition, enumerate_diagrams, rank, top, vconcat
from .exactlinalg import (
    DeltaScalar,
    Matrix,
    Rational,
    commutant_dimension,
    delta_power,
    sparse_rank,
    zeros,
)
from .reps import ModuleRep
from .rook import GrothendieckVector, PartialPermutation, decompose_by_character, rook_generators


@dataclass(frozen=True)
class WBasisVector:
    k: int
    n: int
    word: tuple[int, ...]
    zeroparts: SetPartition = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "zeroparts", canonical_set_partition(self.zeroparts))
        if len(self.word) != self.k:
            raise ValueError("word length must equal k")
        if any(not 0 <= a <= self.n for a in self.word):
            raise ValueError(f"letters must lie in 0..{self.n}")
        zeros_ = {j for j, a in enumerate(self.word, 1) if a == 0}
        covered = [x for D in self.zeroparts for x in D]
        if sorted(covered) != sorted(zeros_):
            raise ValueError("zeroparts must partition the zero positions")

    def letter_classes(self) -> dict[int, tuple[int, ...]]:
        """Nonempty C_j = positions carrying letter j >= 1."""
        out: dict[int, list[int]] = {}
        for pos, a in enumerate(self.word, 1):
            if a:
                out.setdefault(a, []).append(pos)
        return {a: tuple(v) for a, v in sorted(out.items())}

    def __str__(self) -> str:
        word = ",".join(f"e{a}" for a in self.word)
        zp = "|".join(",".join(map(str, D)) for D in self.zeroparts)
        return f"({word}; {zp})"


@lru_cache(maxsize=None)
def w_basis(k: int, n: int) -> tuple[WBasisVector, ...]:
    """All basis vectors, words in lexicographic order then zero-part RGS order."""
    out = []
    for word in product(range(n + 1), repeat=k):
        zpos = [j for j, a in enumerate(word, 1) if a == 0]
        for zp in set_partitions(zpos):
            out.append(WBasisVector(k, n, word, zp))
    return tuple(out)


def w_dimension(k: int, n: int) -> int:
    return generalized_bell(n, k)


# ---------------------------------------------------------------------------
# n-restricted set partitions


@dataclass(frozen=True)
class RestrictedSetPartition:
    n: int
    k: int
    parts: SetPartition = field(default=())

    def __post_init__(self):
        parts = canonical_set_partition(self.parts)
        object.__setattr__(self, "parts", parts)
        if sorted(x for P in parts for x in P) != list(range(1, self.n + self.k + 1)):
            raise ValueError(f"parts must partition [{self.n + self.k}]")
        if any(sum(1 for x in P if x <= self.n) > 1 for P in parts):
            raise ValueError(f"elements of [{self.n}] must lie in distinct parts")


def restricted_partitions(n: int, k: int) -> Iterator[RestrictedSetPartition]:
    for sp in set_partitions(range(1, n + k + 1)):
        if all(sum(1 for x in P if x <= n) <= 1 for P in sp):
            yield RestrictedSetPartition(n, k, sp)


def from_restricted(p: RestrictedSetPartition) -> WBasisVector:
    n, k = p.n, p.k
    word = [0] * k
    zeroparts = []
    for P in p.parts:
        letters = [x for x in P if x <= n]
        positions = [x - n for x in P if x > n]
        if letters:
            for j in positions:
                word[j - 1] = letters[0]
        else:
            zeroparts.append(positions)
    return WBasisVector(k, n, tuple(word), zeroparts)


def to_restricted(x: WBasisVector) -> RestrictedSetPartition:
    """B_l = {l} u {j + n : word[j] = l} for l in [n], plus the shifted zero parts."""
    parts = [[l] + [j + x.n for j, a in enumerate(x.word, 1) if a == l] for l in range(1, x.n + 1)]
    parts += [[j + x.n for j in D] for D in x.zeroparts]
    return RestrictedSetPartition(x.n, x.k, parts)


# ---------------------------------------------------------------------------
# actions


def bar_diagram(x: WBasisVector) -> Diagram:
    blocks = [list(C) + [-j for j in C] for C in x.letter_classes().values()]
    for D in x.zeroparts:
        blocks.append(list(D))
        blocks.append([-j for j in D])
    return Diagram.from_blocks(x.k, x.k, blocks)


def _refines(fine: SetPartition, coarse: Sequence[Sequence[int]]) -> bool:
    where = {v: i for i, P in enumerate(coarse) for v in P}
    return all(len({where[v] for v in B}) == 1 for B in fine)


def act_right_raw(x: WBasisVector, d: Diagram, refine: bool = False) -> tuple[int, WBasisVector] | None:
    """x . d as (number of removed middle components, basis vector), or None for 0.

    The product vanishes exactly when rank(bar o d) < rank(bar), i.e. when
    two letter classes get joined or one loses its bottom vertices.  Zero
    parts may be split or merged freely.  ``refine=True`` additionally
    demands that top(d) refine {C_j} u {D_q}; that variant is not
    associative and is kept only for comparison.
    """
    if d.k != x.k or d.l != x.k:
        raise ValueError(f"{d} is not in A_{x.k}")
    classes = x.letter_classes()
    if refine and not _refines(top(d), list(classes.values()) + list(x.zeroparts)):
        return None
    bar = bar_diagram(x)
    e, c = vconcat(bar, d)
    if rank(e) != rank(bar):
        return None
    letter_of_block = {e.top_label(C[0]): a for a, C in classes.items()}
    word = [0] * x.k
    zeroparts = []
    for top_part, bottom_part in e.blocks():
        if not bottom_part:
            continue
        a = letter_of_block.get(e.bottom_label(bottom_part[0]))
        if a is None:
            zeroparts.append(bottom_part)
        else:
            for j in bottom_part:
                word[j - 1] = a
    return c, WBasisVector(x.k, x.n, tuple(word), zeroparts)


def act_right(x: WBasisVector, d: Diagram, delta: Rational | None = None):
    """(coefficient, vector) or None; the coefficient is delta^m."""
    hit = act_right_raw(x, d)
    if hit is None:
        return None
    c, y = hit
    return delta_power(c, delta), y


def act_left(sigma: PartialPermutation, x: WBasisVector) -> WBasisVector | None:
    if len(sigma) != x.n:
        raise ValueError("partial permutation has the wrong size")
    word = []
    for a in x.word:
        if a == 0:
            word.append(0)
        elif sigma[a - 1] == 0:
            return None
        else:
            word.append(sigma[a - 1])
    return WBasisVector(x.k, x.n, tuple(word), x.zeroparts)


def bitrace(sigma: PartialPermutation, d: Diagram, n: int, delta: Rational | None = None):
    """Sum over the basis of the coefficient of x in sigma . x . d."""
    total = DeltaScalar() if delta is None else Fraction(0)
    for x in w_basis(d.k, n):
        hit = act_right(x, d, delta)
        if hit is None:
            continue
        w, y = hit
        if act_left(sigma, y) == x:
            total = total + w
    return total


def w_left_module(k: int, n: int) -> ModuleRep:
    """W_{k,n} as a left R_n-module (column convention)."""
    basis = w_basis(k, n)
    index = {x: i for i, x in enumerate(basis)}

    def act(sigma) -> Matrix:
        m = zeros(len(basis), len(basis), 0)
        for j, x in enumerate(basis):
            y = act_left(tuple(sigma), x)
            if y is not None:
                m[index[y]][j] = 1
        return m

    return ModuleRep(basis, act, side="left", name=f"W_{k},{n}")


def w_right_module(k: int, n: int, delta: Rational | None = None) -> ModuleRep:
    basis = w_basis(k, n)
    return ModuleRep(basis, lambda d: phi_matrix(d, k, n, delta), side="right", name=f"W_{k},{n}")


def phi_matrix(d: Diagram, k: int, n: int, delta: Rational | None = None) -> Matrix:
    basis = w_basis(k, n)
    index = {x: i for i, x in enumerate(basis)}
    zero = DeltaScalar() if delta is None else Fraction(0)
    m = zeros(len(basis), len(basis), zero)
    for i, x in enumerate(basis):
        hit = act_right(x, d, delta)
        if hit is not None:
            w, y = hit
            m[i][index[y]] = w
    return m


def image_rank(k: int, n: int, delta: Rational) -> int:
    """dim of the span of phi(d), d in A_k, at a rational delta."""
    basis = w_basis(k, n)
    index = {x: i for i, x in enumerate(basis)}
    dim = len(basis)
    q = Fraction(delta)
    rows = []
    for d in enumerate_diagrams(k):
        row: dict[int, Fraction] = {}
        for i, x in enumerate(basis):
            hit = act_right_raw(x, d)
            if hit is not None:
                c, y = hit
                w = q**c
                if w:
                    row[i * dim + index[y]] = w
        rows.append(row)
    return sparse_rank(rows)


def w_commutant_dim(k: int, n: int) -> int:
    """dim End_{R_n}(W_{k,n}), from the generators s_1..s_{n-1}, e_{n-1}."""
    rep = w_left_module(k, n)
    return commutant_dimension([rep.act(g) for g in rook_generators(n)])


def decompose_w(k: int, n: int) -> GrothendieckVector:
    return decompose_by_character(w_left_module(k, n), n)


# ---------------------------------------------------------------------------
# the classical action on tensor space


def phi_k_tensor(d: Diagram, k: int, n: int) -> Matrix:
    """0/1 matrix on (C^n)^{(x)k}: entry [I][J] is 1 iff the labelling of top
    vertices by I and bottom vertices by J is constant on every block of d."""
    if d.k != k or d.l != k:
        raise ValueError(f"{d} is not in A_{k}")
    words = list(product(range(n), repeat=k))
    blocks = d.blocks()
    m = zeros(len(words), len(words), 0)
    for a, I in enumerate(words):
        for b, J in enumerate(words):
            ok = True
            for t, bt in blocks:
                vals = {I[i - 1] for i in t} | {J[j - 1] for j in bt}
                if len(vals) > 1:
                    ok = False
                    break
            if ok:
                m[a][b] = 1
    return m


def tensor_image_rank(k: int, n: int) -> int:
    rows = []
    for d in enumerate_diagrams(k):
        m = phi_k_tensor(d, k, n)
        size = len(m)
        rows.append({i * size + j: 1 for i in range(size) for j in range(size) if m[i][j]})
    return sparse_rank(rows)
