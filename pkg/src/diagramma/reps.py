"""Explicit matrix modules and their characters.

Left modules use the column convention: ``act(x)[i][j]`` is the coefficient
of basis vector ``i`` in ``x . basis[j]``, so ``act(xy) == act(x) @ act(y)``.

Modules covered: Specht modules of S_n, standard modules P_k^lambda of the
partition algebra, simple modules I_k^lambda of the dual symmetric inverse
monoid (optionally transported to a subalgebra I(X, Y, xi)), and simple
modules R_n^lambda of the rook monoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Any, Callable, Sequence

from .combinatorics import Partition, Tableau, partitions_up_to, syt_list
from .diagrams import (
    Diagram,
    d_mu,
    d_mu_X_xi,
    dual_slots,
    enumerate_K,
    enumerate_N,
    invariant_partitions_of,
    rank,
    restrict,
    vconcat,
)
from .exactlinalg import (
    DeltaScalar,
    Matrix,
    Rational,
    delta_power,
    inverse,
    mat_add,
    mat_scale,
    trace,
    zeros,
)
from .palgebra import AlgebraElement, SubalgebraSpec, lift_from_Z, subalgebra_contains

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class ModuleRep:
    """A module given by an indexed basis and a function producing the
    matrix of an element."""

    basis: tuple
    act: Callable[[Any], Matrix]
    side: str = "left"
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)


def trace_of(rep: ModuleRep, x) -> Any:
    if rep.dim == 0:
        return 0
    return trace(rep.act(x))


# ---------------------------------------------------------------------------
# Specht modules inside the tabloid module


def _tabloid(t: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(row)) for row in t)


def _columns(t: Tableau) -> list[list[tuple[int, int]]]:
    width = len(t[0]) if t else 0
    return [[(r, c) for r in range(len(t)) if c < len(t[r])] for c in range(width)]


def _sign(p: Sequence[int]) -> int:
    seen, sign = set(), 1
    for start in range(len(p)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign


def polytabloid(t: Tableau) -> dict[tuple, int]:
    """e_T = sum over column permutations q of sign(q) {q T}."""
    cols = _columns(t)
    out: dict[tuple, int] = {}
    for choice in product(*(permutations(range(len(col))) for col in cols)):
        rows = [list(row) for row in t]
        sign = 1
        for col, perm in zip(cols, choice):
            sign *= _sign(perm)
            for (r, c), p in zip(col, perm):
                rows[r][c] = t[col[p][0]][c]
        key = _tabloid(rows)
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _specht_data(lam: Partition):
    tabs = syt_list(lam)
    rows = [_tabloid(t) for t in tabs]
    coords = [polytabloid(t) for t in tabs]
    square = [[coords[j].get(r, 0) for j in range(len(tabs))] for r in rows]
    return tabs, rows, inverse(square)


@lru_cache(maxsize=None)
def specht_matrix(lam: Partition, p: Permutation) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of the permutation p (one-line, 1-based) on S^lam in the
    standard polytabloid basis."""
    lam = tuple(lam)
    tabs, rows, inv = _specht_data(lam)
    if len(p) != sum(lam):
        raise ValueError("permutation size does not match the partition")
    cols = []
    for t in tabs:
        moved = tuple(tuple(p[x - 1] for x in row) for row in t)
        e = polytabloid(moved)
        b = [e.get(r, 0) for r in rows]
        cols.append([sum(inv[i][j] * b[j] for j in range(len(b))) for i in range(len(b))])
    return tuple(tuple(cols[j][i] for j in range(len(tabs))) for i in range(len(tabs)))


def adjacent_transposition(n: int, i: int) -> Permutation:
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def specht_module(lam: Partition) -> ModuleRep:
    lam = tuple(lam)
    return ModuleRep(
        basis=tuple(syt_list(lam)),
        act=lambda p: [list(row) for row in specht_matrix(lam, tuple(p))],
        name=f"S^{list(lam)}",
    )


def specht_generators(lam: Partition) -> list[Matrix]:
    n = sum(lam)
    return [[list(r) for r in specht_matrix(tuple(lam), adjacent_transposition(n, i))]
            for i in range(1, n)]


# ---------------------------------------------------------------------------
# modules spanned by a one-sided cell tensored with a Specht module


def _slot_normalize(e: Diagram, slots: Sequence[Sequence[int]]):
    """Sort the blocks hanging from the bottom slots by minimum top entry.

    Returns (normalized diagram, r) where slot j's top part has rank r[j-1],
    or None when two slots share a block or some slot block has no top vertex.
    """
    labels = [e.bottom_label(s[0]) for s in slots]
    if len(set(labels)) != len(labels):
        return None
    first_top: dict[int, int] = {}
    for i in range(e.k, 0, -1):
        first_top[e.top_label(i)] = i
    if any(b not in first_top for b in labels):
        return None
    order = sorted(range(len(slots)), key=lambda j: first_top[labels[j]])
    r = [0] * len(slots)
    for pos, j in enumerate(order):
        r[j] = pos + 1
    new = list(e.labels)
    for j, s in enumerate(slots):
        for v in slots[r[j] - 1]:
            new[e.k + v - 1] = labels[j]
    return Diagram.from_labels(e.k, e.l, new), tuple(r)


def _cell_matrix(d: Diagram, cross: Sequence[Diagram], index: dict[Diagram, int],
                 slots: Sequence[Sequence[int]], lam: Partition, delta, zero) -> Matrix:
    f = len(syt_list(lam))
    size = len(cross) * f
    m = zeros(size, size, zero)
    for a, b in enumerate(cross):
        e, c = vconcat(d, b)
        hit = _slot_normalize(e, slots)
        if hit is None:
            continue
        e0, r = hit
        target = index.get(e0)
        if target is None:
            continue
        w = delta_power(c, delta)
        rho = specht_matrix(tuple(lam), r)
        for t in range(f):
            for s in range(f):
                if rho[s][t]:
                    m[target * f + s][a * f + t] = w * rho[s][t]
    return m


def _linear(act_diagram: Callable[[Diagram], Matrix], dim: int, zero):
    def act(x):
        if isinstance(x, Diagram):
            return act_diagram(x)
        if isinstance(x, AlgebraElement):
            out = zeros(dim, dim, zero)
            for d, c in x.terms.items():
                out = mat_add(out, mat_scale(c, act_diagram(d)))
            return out
        raise TypeError(f"cannot act with {type(x).__name__}")

    return act


def standard_module(k: int, lam: Partition, delta: Rational | None = None) -> ModuleRep:
    """P_k^lam = C[V(k,i)] (x)_{S_i} S^lam with basis N(k,i) x SYT(lam).

    Entries are delta-polynomials, or rationals when ``delta`` is given.
    """
    lam = tuple(lam)
    i = sum(lam)
    if i > k:
        raise ValueError(f"|{lam}| exceeds k={k}")
    cross = enumerate_N(k, i)
    index = {b: a for a, b in enumerate(cross)}
    slots = [[j] for j in range(1, i + 1)]
    tabs = syt_list(lam)
    zero = DeltaScalar() if delta is None else Fraction(0)

    def act_diagram(d: Diagram) -> Matrix:
        if d.k != k or d.l != k:
            raise ValueError(f"{d} is not in A_{k}")
        return _cell_matrix(d, cross, index, slots, lam, delta, zero)

    return ModuleRep(
        basis=tuple(product(cross, tabs)),
        act=_linear(act_diagram, len(cross) * len(tabs), zero),
        name=f"P_{k}^{list(lam)}",
    )


def _is_block_bijection(d: Diagram) -> bool:
    return all(t and b for t, b in d.blocks())


def dual_module(k: int, lam: Partition, spec: SubalgebraSpec | None = None,
                delta: Rational | None = None) -> ModuleRep:
    """Simple module I^lam of C[I_k^*] with basis K(k,i) x SYT(lam).

    With ``spec``, the module of I(X, Y, xi) obtained by pulling back
    I_Z^lam along d -> delta^|Y| * (restriction of d to Z u Z'); the basis is
    labelled by the lifted diagrams.  ``|lam| > |Z|`` gives the zero module.
    """
    lam = tuple(lam)
    i = sum(lam)
    if spec is None:
        if i > k:
            return ModuleRep((), lambda x: [], name=f"I_{k}^{list(lam)}")
        cross = enumerate_K(k, i)
        index = {b: a for a, b in enumerate(cross)}
        slots = dual_slots(k, i)
        tabs = syt_list(lam)

        def act_diagram(d: Diagram) -> Matrix:
            if d.k != k or not _is_block_bijection(d):
                raise ValueError(f"{d} is not in I_{k}^*")
            return _cell_matrix(d, cross, index, slots, lam, 0, Fraction(0))

        return ModuleRep(tuple(product(cross, tabs)),
                         _linear(act_diagram, len(cross) * len(tabs), Fraction(0)),
                         name=f"I_{k}^{list(lam)}")

    if spec.k != k:
        raise ValueError("spec is for a different k")
    if delta is None:
        scale = DeltaScalar.monomial(len(spec.Y))
        zero = DeltaScalar()
    else:
        if delta == 0:
            raise ZeroDivisionError("I(X, Y, xi) modules need delta != 0")
        scale = Fraction(delta) ** len(spec.Y)
        zero = Fraction(0)
    t = len(spec.Z)
    base = dual_module(t, lam)
    basis = tuple((lift_from_Z(spec, b), tab) for b, tab in base.basis)

    def act_sub(d: Diagram) -> Matrix:
        if not subalgebra_contains(spec, d):
            raise ValueError(f"{d} is not in I(X, Y, xi)")
        return mat_scale(scale, base.act(restrict(d, spec.Z)))

    return ModuleRep(basis, _linear(act_sub, len(basis), zero), name=f"I_{spec}^{list(lam)}")


def dual_module_lifted(spec: SubalgebraSpec, lam: Partition, delta: Rational | None = None) -> ModuleRep:
    """Same module as ``dual_module(k, lam, spec)`` computed directly inside
    P_k(delta): the lifted left cell with delta-weighted products."""
    lam = tuple(lam)
    i = sum(lam)
    Z = spec.Z
    t = len(Z)
    if i > t:
        return ModuleRep((), lambda x: [])
    cross = [lift_from_Z(spec, b) for b in enumerate_K(t, i)]
    index = {b: a for a, b in enumerate(cross)}
    slots = [[Z[v - 1] for v in s] for s in dual_slots(t, i)]
    zero = DeltaScalar() if delta is None else Fraction(0)
    tabs = syt_list(lam)

    def act_diagram(d: Diagram) -> Matrix:
        if not subalgebra_contains(spec, d):
            raise ValueError(f"{d} is not in I(X, Y, xi)")
        return _cell_matrix(d, cross, index, slots, lam, delta, zero)

    return ModuleRep(tuple(product(cross, tabs)), _linear(act_diagram, len(cross) * len(tabs), zero))


# ---------------------------------------------------------------------------
# rook monoid simple modules


def rook_simple_module(n: int, lam: Partition) -> ModuleRep:
    """R_n^lam = C[L_i] (x)_{S_i} S^lam.

    L_i is taken as the rank-i partial permutations with domain [i]; its
    S_i-orbits are indexed by the image, an i-subset of [n].  Elements of R_n
    are tuples of images with 0 meaning undefined.
    """
    lam = tuple(lam)
    i = sum(lam)
    if i > n:
        raise ValueError(f"|{lam}| exceeds n={n}")
    subsets = list(combinations(range(1, n + 1), i))
    index = {s: a for a, s in enumerate(subsets)}
    tabs = syt_list(lam)
    f = len(tabs)

    def act(sigma: Sequence[int]) -> Matrix:
        if len(sigma) != n:
            raise ValueError("partial permutation has the wrong size")
        m = zeros(len(subsets) * f, len(subsets) * f, 0)
        for a, S in enumerate(subsets):
            images = [sigma[s - 1] for s in S]
            if 0 in images:
                continue
            target = tuple(sorted(images))
            q = tuple(target.index(x) + 1 for x in images)
            rho = specht_matrix(lam, q)
            b = index[target]
            for t in range(f):
                for s in range(f):
                    if rho[s][t]:
                        m[b * f + s][a * f + t] = rho[s][t]
        return m

    return ModuleRep(tuple(product(subsets, tabs)), act, name=f"R_{n}^{list(lam)}")


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class CharacterReduction:
    mu: tuple[int, ...]
    s: int


def _power_data(d: Diagram) -> tuple[Diagram, Diagram]:
    """(idempotent power e = d^N, g = d^(N+1)) in the monoid of diagrams under o."""
    powers = [d]
    seen = {d: 0}
    while True:
        nxt = vconcat(powers[-1], d)[0]
        if nxt in seen:
            index, period = seen[nxt], len(powers) - seen[nxt]
            break
        seen[nxt] = len(powers)
        powers.append(nxt)
    n = period
    while n - 1 < index:
        n += period
    # powers[j] is d^(j+1)
    def power(m: int) -> Diagram:
        if m - 1 < len(powers):
            return powers[m - 1]
        return powers[index + (m - 1 - index) % period]

    return power(n), power(n + 1)


def stable_cycle_type(d: Diagram) -> tuple[int, ...]:
    """Cycle type of the permutation d induces on the propagating blocks of
    its idempotent power, in weakly decreasing order."""
    e, g = _power_data(d)
    e_blocks = [(t, b) for t, b in e.blocks() if t and b]
    g_blocks = [(t, b) for t, b in g.blocks() if t and b]
    tops = {t: j for j, (t, _) in enumerate(e_blocks)}
    bots = {b: j for j, (_, b) in enumerate(e_blocks)}
    perm = [0] * len(e_blocks)
    for t, b in g_blocks:
        perm[tops[t]] = bots[b]
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        cycles.append(length)
    return tuple(sorted(cycles, reverse=True))


@lru_cache(maxsize=None)
def _standard_modules(k: int) -> tuple[tuple[Partition, ModuleRep], ...]:
    return tuple((lam, standard_module(k, lam)) for lam in partitions_up_to(k))


def find_character_reduction(d: Diagram) -> CharacterReduction:
    """(mu, s) with chi_V(d) = delta^s chi_V(d_mu) on every standard module V.

    s is an integer and can be negative: d_mu carries one loop-producing
    E_1 per free strand, which d itself need not have.

    mu is read off the stable permutation of d's powers; s is fixed by
    comparing traces and the identity is then checked for every lambda.
    """
    k = d.k
    mu = stable_cycle_type(d)
    dm = d_mu(k, mu)
    s = None
    pairs = []
    for lam, rep in _standard_modules(k):
        a, b = trace_of(rep, d), trace_of(rep, dm)
        pairs.append((lam, a, b))
        if s is None and b:
            s = _as_poly(a).degree - _as_poly(b).degree
    s = s or 0
    # s may be negative (e.g. d = {1,2},{1',2'}), so compare with denominators cleared
    for lam, a, b in pairs:
        if DeltaScalar.monomial(max(-s, 0)) * _as_poly(a) != DeltaScalar.monomial(max(s, 0)) * _as_poly(b):
            raise AssertionError(f"character reduction failed for {d} at {lam}")
    return CharacterReduction(mu, s)


def _as_poly(x) -> DeltaScalar:
    return x if isinstance(x, DeltaScalar) else DeltaScalar.const(x)


def character_table(k: int, delta: Rational | None = None) -> dict[Partition, dict[Partition, Any]]:
    """chi_{P_k^lam}(d_mu) for all lam with |lam| <= k and partitions mu of m <= k."""
    mus = partitions_up_to(k)
    table = {}
    for lam in partitions_up_to(k):
        rep = standard_module(k, lam, delta)
        table[lam] = {mu: trace_of(rep, d_mu(k, mu)) for mu in mus}
    return table


def thm_cr_sides(k: int, mu: Sequence[int], lam: Partition, delta: Rational) -> tuple[Fraction, Fraction]:
    """Both sides of the expansion of chi_{P_k^lam}(d_mu) over subalgebras
    I(X, Y, xi) with Y = [k] minus [m]."""
    if delta == 0:
        raise ZeroDivisionError("the expansion needs delta != 0")
    mu = tuple(mu)
    m = sum(mu)
    lhs = Fraction(trace_of(standard_module(k, lam, delta), d_mu(k, mu)))
    Y = set(range(m + 1, k + 1))
    rhs = Fraction(0)
    for size in range(m + 1):
        for X in combinations(range(1, m + 1), size):
            if m - size < sum(lam):
                continue
            for xi in invariant_partitions_of(X, mu):
                spec = SubalgebraSpec(k, frozenset(X), frozenset(Y), xi)
                rep = dual_module(k, lam, spec, delta)
                rhs += Fraction(trace_of(rep, d_mu_X_xi(k, mu, X, xi)))
    return lhs, rhs


def verify_thm_cr(k: int, mu: Sequence[int], lam: Partition, delta: Rational) -> dict:
    lhs, rhs = thm_cr_sides(k, mu, lam, delta)
    return {"k": k, "mu": list(mu), "lambda": list(lam), "delta": str(Fraction(delta)),
            "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}
