"""Partition diagrams on [k] u [l'] and the named diagram families.

A diagram is stored as a restricted growth string over the vertices in the
total order ``1 < 2 < ... < k < 1' < ... < l'``: ``labels[v]`` is the index of
the block containing vertex ``v``, and blocks are numbered by first
occurrence.  That string is canonical, so equality and hashing are structural.

When diagrams are built from explicit blocks, top vertex ``i`` is written as
the integer ``i`` and bottom vertex ``j'`` as ``-j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import gcd
from typing import Iterable, Iterator, Sequence

from .combinatorics import restricted_growth_strings, set_partitions

SetPartition = tuple[tuple[int, ...], ...]
Composition = tuple[int, ...]
Permutation = tuple[int, ...]  # one-line notation, 1-based values


def canonical_labels(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


def canonical_set_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks if b))


@dataclass(frozen=True)
class Diagram:
    k: int
    l: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.k + self.l:
            raise ValueError("label string has the wrong length")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_labels(cls, k: int, l: int, labels: Sequence[int]) -> Diagram:
        return cls(k, l, canonical_labels(labels))

    @classmethod
    def from_blocks(cls, k: int, l: int, blocks: Iterable[Iterable[int]]) -> Diagram:
        labels = [-1] * (k + l)
        for b, block in enumerate(blocks):
            for v in block:
                pos = _position(k, l, v)
                if labels[pos] != -1:
                    raise ValueError(f"vertex {_vertex_name(v)} appears twice")
                labels[pos] = b
        missing = [i for i, x in enumerate(labels) if x == -1]
        if missing:
            raise ValueError(f"vertex {_vertex_name(_vertex(k, missing[0]))} is not covered")
        return cls.from_labels(k, l, labels)

    @classmethod
    def from_permutation(cls, p: Permutation) -> Diagram:
        """The diagram with blocks {j, p(j)'}."""
        n = len(p)
        return cls.from_blocks(n, n, [[j + 1, -p[j]] for j in range(n)])

    # -- structure ---------------------------------------------------------

    @property
    def num_blocks(self) -> int:
        return max(self.labels, default=-1) + 1

    def blocks(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Blocks as (top vertices, bottom vertices), in canonical order."""
        tops: list[list[int]] = [[] for _ in range(self.num_blocks)]
        bots: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i in range(self.k):
            tops[self.labels[i]].append(i + 1)
        for j in range(self.l):
            bots[self.labels[self.k + j]].append(j + 1)
        return [(tuple(t), tuple(b)) for t, b in zip(tops, bots)]

    def vertex_blocks(self) -> list[tuple[int, ...]]:
        """Blocks in the signed-vertex convention (bottom j' as -j)."""
        return [t + tuple(-j for j in b) for t, b in self.blocks()]

    def top_label(self, i: int) -> int:
        return self.labels[i - 1]

    def bottom_label(self, j: int) -> int:
        return self.labels[self.k + j - 1]

    def is_propagating_block(self, b: int) -> bool:
        return b in self.labels[: self.k] and b in self.labels[self.k :]

    def __str__(self) -> str:
        return format_diagram(self)


def _position(k: int, l: int, v: int) -> int:
    if 1 <= v <= k:
        return v - 1
    if 1 <= -v <= l:
        return k - v - 1
    raise ValueError(f"vertex {_vertex_name(v)} out of range for [{k};{l}]")


def _vertex(k: int, pos: int) -> int:
    return pos + 1 if pos < k else -(pos - k + 1)


def _vertex_name(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def top(d: Diagram) -> SetPartition:
    return tuple(t for t, _ in d.blocks() if t)


def bottom(d: Diagram) -> SetPartition:
    return canonical_set_partition(b for _, b in d.blocks())


def rank(d: Diagram) -> int:
    return sum(1 for t, b in d.blocks() if t and b)


def identity(k: int) -> Diagram:
    return Diagram.from_labels(k, k, list(range(k)) * 2)


def swap_rows(d: Diagram) -> Diagram:
    """Reflect top and bottom rows."""
    return Diagram.from_labels(d.l, d.k, d.labels[d.k :] + d.labels[: d.k])


# ---------------------------------------------------------------------------
# text format: "[k;l] 1,3',4' | 2,3,4,1' | 2' | 5,6,7"

_HEADER = re.compile(r"^\s*\[\s*(\d+)\s*;\s*(\d+)\s*\]\s*(.*)$", re.S)


def format_diagram(d: Diagram) -> str:
    parts = [",".join(_vertex_name(v) for v in block) for block in d.vertex_blocks()]
    return f"[{d.k};{d.l}] " + " | ".join(parts) if parts else f"[{d.k};{d.l}]"


def parse_diagram(text: str) -> Diagram:
    m = _HEADER.match(text)
    if not m:
        raise ValueError(f"malformed diagram header: {text!r}")
    k, l, body = int(m.group(1)), int(m.group(2)), m.group(3).strip()
    blocks = []
    if body:
        for part in body.split("|"):
            block = []
            for tok in part.split(","):
                tok = tok.strip()
                if not re.fullmatch(r"\d+'?", tok):
                    raise ValueError(f"malformed vertex {tok!r} in {text!r}")
                block.append(-int(tok[:-1]) if tok.endswith("'") else int(tok))
            blocks.append(block)
    return Diagram.from_blocks(k, l, blocks)


# ---------------------------------------------------------------------------
# concatenation


def vconcat(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Stack d1 over d2; return the composite and the number of components
    left floating in the identified middle row."""
    if d1.l != d2.k:
        raise ValueError(f"cannot stack [{d1.k};{d1.l}] over [{d2.k};{d2.l}]")
    b1 = d1.num_blocks
    parent = list(range(b1 + d2.num_blocks))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(d1.l):
        ra, rb = find(d1.labels[d1.k + j]), find(b1 + d2.labels[j])
        if ra != rb:
            parent[ra] = rb
    out = [find(d1.labels[i]) for i in range(d1.k)]
    out += [find(b1 + d2.labels[d2.k + j]) for j in range(d2.l)]
    used = set(out)
    middle = {find(d1.labels[d1.k + j]) for j in range(d1.l)}
    return Diagram.from_labels(d1.k, d2.l, out), len(middle - used)


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    return vconcat(d1, d2)[0]


def hconcat(d1: Diagram, d2: Diagram) -> Diagram:
    """Place d2 to the right of d1."""
    shift = d1.num_blocks
    labels = (
        list(d1.labels[: d1.k])
        + [shift + x for x in d2.labels[: d2.k]]
        + list(d1.labels[d1.k :])
        + [shift + x for x in d2.labels[d2.k :]]
    )
    return Diagram.from_labels(d1.k + d2.k, d1.l + d2.l, labels)


def tensor(*ds: Diagram) -> Diagram:
    out = Diagram(0, 0, ())
    for d in ds:
        out = hconcat(out, d)
    return out


def restrict(d: Diagram, keep: Sequence[int]) -> Diagram:
    """Restrict a k x k diagram to the vertices keep u keep', renumbered 1..t.

    Only meaningful when no block of d joins kept and discarded vertices.
    """
    keep = sorted(keep)
    labels = [d.top_label(i) for i in keep] + [d.bottom_label(i) for i in keep]
    return Diagram.from_labels(len(keep), len(keep), labels)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def enumerate_diagrams(k: int, l: int | None = None) -> tuple[Diagram, ...]:
    """All partition diagrams on [k] u [l'] (l defaults to k), in RGS order."""
    l = k if l is None else l
    return tuple(Diagram(k, l, rgs) for rgs in restricted_growth_strings(k + l))


def _attach(k: int, top_blocks: Sequence[Sequence[int]], slots: Sequence[Sequence[int]],
            rest_top: Sequence[Sequence[int]] = (), rest_bottom: Sequence[Sequence[int]] = ()) -> Diagram:
    """Diagram whose j-th propagating block is top_blocks[j] u slots[j]'."""
    blocks = [list(t) + [-b for b in s] for t, s in zip(top_blocks, slots)]
    blocks += [list(t) for t in rest_top]
    blocks += [[-b for b in s] for s in rest_bottom]
    return Diagram.from_blocks(k, k, blocks)


@lru_cache(maxsize=None)
def enumerate_V(k: int, i: int) -> tuple[Diagram, ...]:
    """Rank-i diagrams with singleton bottom blocks and 1',...,i' propagating."""
    out = []
    for tp in set_partitions(range(1, k + 1)):
        for chosen in permutations(range(len(tp)), i):
            rest = [tp[b] for b in range(len(tp)) if b not in chosen]
            out.append(_attach(k, [tp[b] for b in chosen], [[j] for j in range(1, i + 1)],
                               rest, [[j] for j in range(i + 1, k + 1)]))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_N(k: int, i: int) -> tuple[Diagram, ...]:
    """The cross-section of V(k, i) whose propagating top blocks increase in
    minimum entry order along 1', ..., i'."""
    out = []
    for tp in set_partitions(range(1, k + 1)):
        for chosen in combinations(range(len(tp)), i):
            rest = [tp[b] for b in range(len(tp)) if b not in chosen]
            out.append(_attach(k, [tp[b] for b in chosen], [[j] for j in range(1, i + 1)],
                               rest, [[j] for j in range(i + 1, k + 1)]))
    return tuple(out)


def dual_slots(k: int, i: int) -> list[list[int]]:
    """Bottom blocks {1'}, ..., {(i-1)'}, {i', ..., k'} of the L-class of epsilon_i."""
    if i == 0:
        return []
    return [[j] for j in range(1, i)] + [list(range(i, k + 1))]


@lru_cache(maxsize=None)
def enumerate_dual(k: int) -> tuple[Diagram, ...]:
    """I_k^*: diagrams all of whose blocks are propagating."""
    out = []
    for tp in set_partitions(range(1, k + 1)):
        for bp in set_partitions(range(1, k + 1)):
            if len(bp) != len(tp):
                continue
            for perm in permutations(range(len(bp))):
                out.append(_attach(k, tp, [bp[p] for p in perm]))
    return tuple(sorted(out, key=lambda d: d.labels))


@lru_cache(maxsize=None)
def enumerate_L(k: int, i: int) -> tuple[Diagram, ...]:
    """Rank-i elements of I_k^* with bottom partition {1'},...,{(i-1)'},{i',...,k'}."""
    if k == 0 and i == 0:
        return (Diagram(0, 0, ()),)
    slots = dual_slots(k, i)
    out = []
    for tp in set_partitions(range(1, k + 1)):
        if len(tp) == i:
            for perm in permutations(tp):
                out.append(_attach(k, perm, slots))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_K(k: int, i: int) -> tuple[Diagram, ...]:
    """Elements of L(k, i) whose top blocks increase in minimum entry order."""
    if k == 0 and i == 0:
        return (Diagram(0, 0, ()),)
    slots = dual_slots(k, i)
    return tuple(_attach(k, tp, slots) for tp in set_partitions(range(1, k + 1)) if len(tp) == i)


# ---------------------------------------------------------------------------
# named diagrams


def gamma(i: int) -> Diagram:
    """Diagram of the cycle (1, 2, ..., i): blocks {j, (j+1)'} and {i, 1'}."""
    if i < 1:
        raise ValueError("gamma needs i >= 1")
    return Diagram.from_permutation(tuple(j % i + 1 for j in range(1, i + 1)))


def e1() -> Diagram:
    return Diagram.from_blocks(1, 1, [[1], [-1]])


def epsilon(k: int, i: int) -> Diagram:
    if not 1 <= i <= k:
        raise ValueError("epsilon needs 1 <= i <= k")
    slots = dual_slots(k, i)
    return _attach(k, slots, slots)


def check_composition(mu: Sequence[int]) -> Composition:
    mu = tuple(mu)
    if any(p < 1 for p in mu):
        raise ValueError(f"composition parts must be positive: {mu}")
    return mu


def d_mu(k: int, mu: Sequence[int]) -> Diagram:
    """gamma_{mu_1} (x) ... (x) gamma_{mu_l} (x) E_1^{(x)(k-m)}."""
    mu = check_composition(mu)
    m = sum(mu)
    if m > k:
        raise ValueError(f"composition {mu} overflows k={k}")
    return tensor(*(gamma(p) for p in mu), *([e1()] * (k - m)))


def sigma_mu(mu: Sequence[int]) -> Permutation:
    """Product of the cycles on consecutive blocks of sizes mu_1, mu_2, ..."""
    mu = check_composition(mu)
    out = []
    a = 0
    for p in mu:
        out.extend(a + (j % p) + 1 for j in range(1, p + 1))
        a += p
    return tuple(out)


def apply_perm_to_partition(p: Permutation, sp: Iterable[Iterable[int]]) -> SetPartition:
    return canonical_set_partition([p[x - 1] for x in block] for block in sp)


def is_invariant(p: Permutation, sp: Iterable[Iterable[int]]) -> bool:
    sp = canonical_set_partition(sp)
    return apply_perm_to_partition(p, sp) == sp


def mu_invariant_partitions(m: int, mu: Sequence[int]) -> list[SetPartition]:
    """SP_m^mu by brute force over all set partitions of [m]."""
    if sum(mu) != m:
        raise ValueError(f"{tuple(mu)} is not a composition of {m}")
    s = sigma_mu(mu)
    return [canonical_set_partition(sp) for sp in set_partitions(range(1, m + 1)) if is_invariant(s, sp)]


def invariant_partitions_of(X: Sequence[int], mu: Sequence[int]) -> list[SetPartition]:
    """SP_X^mu: set partitions of X fixed by sigma_mu (empty unless X is sigma_mu-stable)."""
    s = sigma_mu(mu)
    X = sorted(X)
    if {s[x - 1] for x in X} != set(X):
        return []
    return [canonical_set_partition(sp) for sp in set_partitions(X) if is_invariant(s, sp)]


def d_mu_X_xi(k: int, mu: Sequence[int], X: Iterable[int], xi: Iterable[Iterable[int]]) -> Diagram:
    """d_mu with the strands over X replaced by blocks K u K' for K in xi."""
    mu = check_composition(mu)
    m = sum(mu)
    X = set(X)
    xi = canonical_set_partition(xi)
    if {x for K in xi for x in K} != X:
        raise ValueError("xi must be a set partition of X")
    if not X <= set(range(1, m + 1)):
        raise ValueError("X must lie inside [m]")
    if not is_invariant(sigma_mu(mu), xi) or {sigma_mu(mu)[x - 1] for x in X} != X:
        raise ValueError("xi is not fixed by sigma_mu")
    base = d_mu(k, mu)
    blocks = [[*K, *(-x for x in K)] for K in xi]
    for block in base.vertex_blocks():
        if not any(abs(v) in X for v in block):
            blocks.append(list(block))
    return Diagram.from_blocks(k, k, blocks)


# ---------------------------------------------------------------------------
# sigma_mu-invariant set partitions via (xi, f, g) data


@dataclass(frozen=True)
class MuInvariantDatum:
    """A set partition xi of the part indices [l], a period f(P) for each
    block P of xi, and offsets g(i) in [f(P)] with g(min P) = 1."""

    xi: SetPartition
    f: tuple[int, ...]
    g: tuple[int, ...]  # g[i-1] for part index i

    def validate(self, mu: Composition) -> None:
        if sorted(x for P in self.xi for x in P) != list(range(1, len(mu) + 1)):
            raise ValueError("xi must partition the part indices")
        for P, f in zip(self.xi, self.f):
            if f < 1 or any(mu[i - 1] % f for i in P):
                raise ValueError(f"f({P})={f} does not divide every mu_i")
            if self.g[min(P) - 1] != 1:
                raise ValueError("g must send the least element of each block to 1")
            if any(not 1 <= self.g[i - 1] <= f for i in P):
                raise ValueError("g out of range")


def eta(mu: Sequence[int], datum: MuInvariantDatum) -> SetPartition:
    mu = check_composition(mu)
    datum.validate(mu)
    starts = [sum(mu[:i]) for i in range(len(mu))]
    s = sigma_mu(mu)
    blocks = set()
    for P, d in zip(datum.xi, datum.f):
        N = []
        for i in P:
            first = starts[i - 1] + datum.g[i - 1]
            N.extend(range(first, starts[i - 1] + mu[i - 1] + 1, d))
        cur = tuple(sorted(N))
        for _ in range(d):
            blocks.add(cur)
            cur = tuple(sorted(s[x - 1] for x in cur))
    return canonical_set_partition(blocks)


def mu_invariant_data(mu: Sequence[int]) -> Iterator[MuInvariantDatum]:
    mu = check_composition(mu)
    l = len(mu)
    for xi in set_partitions(range(1, l + 1)):
        periods = []
        for P in xi:
            g0 = 0
            for i in P:
                g0 = gcd(g0, mu[i - 1])
            periods.append([f for f in range(1, g0 + 1) if g0 % f == 0])
        for fs in product(*periods):
            offsets = []
            for P, f in zip(xi, fs):
                offsets.append([[1]] + [list(range(1, f + 1))] * (len(P) - 1))
            for choice in product(*[opt for block in offsets for opt in block]):
                g = [0] * l
                it = iter(choice)
                for P in xi:
                    for i in P:
                        g[i - 1] = next(it)
                yield MuInvariantDatum(tuple(xi), tuple(fs), tuple(g))

