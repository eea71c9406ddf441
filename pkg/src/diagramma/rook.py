"""The rook monoid R_n and branching of its simple modules.

A partial permutation of [n] is a tuple ``a`` of length n with ``a[j-1]``
the image of j, or 0 where a is undefined.  ``compose(a, b)`` is the matrix
product AB of the corresponding partial permutation matrices (apply b first).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, format_partition, partitions_up_to, syt_count, young_down, young_up
from .exactlinalg import Matrix, kron, solve, trace, zeros
from .reps import ModuleRep, rook_simple_module

PartialPermutation = tuple[int, ...]


def is_partial_permutation(a: Sequence[int], n: int | None = None) -> bool:
    n = len(a) if n is None else n
    images = [x for x in a if x]
    return len(a) == n and all(0 <= x <= n for x in a) and len(images) == len(set(images))


def compose(a: PartialPermutation, b: PartialPermutation) -> PartialPermutation:
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x - 1] if x else 0 for x in b)


def rook_identity(n: int) -> PartialPermutation:
    return tuple(range(1, n + 1))


def diagonal_idempotent(n: int, i: int) -> PartialPermutation:
    """e_i: identity on [i], undefined on i+1..n."""
    return tuple(j if j <= i else 0 for j in range(1, n + 1))


def rook_rank(a: PartialPermutation) -> int:
    return sum(1 for x in a if x)


@lru_cache(maxsize=None)
def enumerate_rook(n: int) -> tuple[PartialPermutation, ...]:
    """All of R_n, grouped by rank, then by domain, then by images."""
    out = []
    for i in range(n + 1):
        for dom in combinations(range(1, n + 1), i):
            for img in permutations(range(1, n + 1), i):
                a = [0] * n
                for x, y in zip(dom, img):
                    a[x - 1] = y
                out.append(tuple(a))
    return tuple(out)


def rook_generators(n: int) -> list[PartialPermutation]:
    """s_1, ..., s_{n-1} and e_{n-1}; together they generate R_n."""
    gens = []
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(tuple(p))
    gens.append(diagonal_idempotent(n, n - 1))
    return gens


def permutation_matrix(a: PartialPermutation) -> Matrix:
    """Column convention: column j has its one in row a(j)."""
    n = len(a)
    m = zeros(n, n, 0)
    for j, x in enumerate(a):
        if x:
            m[x - 1][j] = 1
    return m


# ---------------------------------------------------------------------------
# explicit modules


def natural_module(n: int) -> ModuleRep:
    return ModuleRep(tuple(range(1, n + 1)), permutation_matrix, name=f"C^{n}")


def trivial_module(n: int) -> ModuleRep:
    return ModuleRep(("triv",), lambda a: [[1]], name="C_triv")


def direct_sum(*reps: ModuleRep) -> ModuleRep:
    dim = sum(r.dim for r in reps)

    def act(x) -> Matrix:
        m = zeros(dim, dim, 0)
        off = 0
        for r in reps:
            block = r.act(x)
            for i in range(r.dim):
                for j in range(r.dim):
                    m[off + i][off + j] = block[i][j]
            off += r.dim
        return m

    basis = tuple((i, b) for i, r in enumerate(reps) for b in r.basis)
    return ModuleRep(basis, act, name=" + ".join(r.name for r in reps))


def tensor_modules(*reps: ModuleRep) -> ModuleRep:
    def act(x) -> Matrix:
        m: Matrix = [[1]]
        for r in reps:
            m = kron(m, r.act(x))
        return m

    basis: list[tuple] = [()]
    for r in reps:
        basis = [b + (v,) for b in basis for v in r.basis]
    return ModuleRep(tuple(basis), act, name=" (x) ".join(r.name for r in reps))


def tensor_power(rep: ModuleRep, i: int, n: int) -> ModuleRep:
    if i == 0:
        return trivial_module(n)
    return tensor_modules(*[rep] * i)


# ---------------------------------------------------------------------------
# Grothendieck group


@dataclass(frozen=True)
class GrothendieckVector:
    """Multiplicities of the simple modules R_n^lam, |lam| <= n."""

    n: int
    mult: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): v for k, v in self.mult.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("multiplicities must be nonnegative")
        if any(sum(k) > self.n for k in clean):
            raise ValueError(f"partition too large for R_{self.n}")
        object.__setattr__(self, "mult", dict(sorted(clean.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))))

    def __add__(self, other: GrothendieckVector) -> GrothendieckVector:
        if self.n != other.n:
            raise ValueError("different levels")
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return GrothendieckVector(self.n, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothendieckVector):
            return NotImplemented
        return self.n == other.n and dict(self.mult) == dict(other.mult)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.mult.items())))

    def dim(self) -> int:
        return sum(v * comb(self.n, sum(k)) * syt_count(k) for k, v in self.mult.items())

    def sum_of_squares(self) -> int:
        return sum(v * v for v in self.mult.values())

    def __str__(self) -> str:
        inner = ", ".join(f"{format_partition(k)}: {v}" for k, v in self.mult.items())
        return f"R_{self.n}{{{inner}}}"


def simple(n: int, lam: Partition) -> GrothendieckVector:
    return GrothendieckVector(n, {tuple(lam): 1})


def _linear_map(v: GrothendieckVector, n_out: int, rule) -> GrothendieckVector:
    out: dict[Partition, int] = {}
    for lam, c in v.mult.items():
        for mu in rule(lam):
            out[mu] = out.get(mu, 0) + c
    return GrothendieckVector(n_out, out)


def restrict_gv(v: GrothendieckVector) -> GrothendieckVector:
    """Res from R_n to R_{n-1}: mu -> mu + mu^- (only mu^- when |mu| = n)."""
    if v.n < 1:
        raise ValueError("cannot restrict from R_0")
    n = v.n
    return _linear_map(v, n - 1, lambda mu: ([mu] if sum(mu) < n else []) + young_down(mu))


def induce_gv(v: GrothendieckVector) -> GrothendieckVector:
    """Ind from R_{n-1} to R_n: lam -> lam + lam^+."""
    return _linear_map(v, v.n + 1, lambda lam: [lam] + young_up(lam))


def induce_hat_gv(v: GrothendieckVector) -> GrothendieckVector:
    return _linear_map(v, v.n + 1, young_up)


def g_functor_gv(v: GrothendieckVector) -> GrothendieckVector:
    """G(R_{n-1}^lam) = R_n^lam."""
    return GrothendieckVector(v.n + 1, v.mult)


def iterate_ind_res(k: int, n: int) -> list[GrothendieckVector]:
    """[start, Res, Ind Res, Res Ind Res, ...]: 2k + 1 vectors starting at R_n^empty."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = [simple(n, ())]
    for _ in range(k):
        out.append(restrict_gv(out[-1]))
        out.append(induce_gv(out[-1]))
    return out


# ---------------------------------------------------------------------------
# decomposition by characters


@lru_cache(maxsize=None)
def simple_character_table(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[Fraction, ...], ...]]:
    """(lambdas, rows) where rows[s][j] = chi_{R_n^lambda_j}(s-th element of R_n)."""
    lams = tuple(partitions_up_to(n))
    reps = [rook_simple_module(n, lam) for lam in lams]
    rows = tuple(tuple(Fraction(trace(r.act(a))) for r in reps) for a in enumerate_rook(n))
    return lams, rows


def character_vector(rep: ModuleRep, n: int) -> list[Fraction]:
    if rep.dim == 0:
        return [Fraction(0)] * len(enumerate_rook(n))
    return [Fraction(trace(rep.act(a))) for a in enumerate_rook(n)]


def decompose_by_character(rep: ModuleRep, n: int) -> GrothendieckVector:
    """Multiplicities of the simple R_n-modules in ``rep``.

    Raises ``Inconsistent`` if the character of ``rep`` is not in the span
    of simple characters, and ``ValueError`` if the solution is not a
    nonnegative integer vector; either signals a broken representation.
    """
    lams, rows = simple_character_table(n)
    chi = character_vector(rep, n)
    coeffs = solve([list(r) for r in rows], chi)
    mult = {}
    for lam, c in zip(lams, coeffs):
        if c.denominator != 1 or c < 0:
            raise ValueError(f"non-integral or negative multiplicity {c} at {lam}")
        mult[lam] = int(c)
    return GrothendieckVector(n, mult)


# ---------------------------------------------------------------------------
# Bratteli diagram


def bratteli_levels(k: int, n: int) -> list[dict]:
    vectors = iterate_ind_res(k, n)
    levels = [{"step": 0, "kind": "init", "n": n,
               "nodes": [{"partition": list(p), "mult": m} for p, m in vectors[0].mult.items()],
               "edges": []}]
    for step in range(1, 2 * k + 1):
        prev, cur = vectors[step - 1], vectors[step]
        if step % 2:
            kind = "res"
            rule = lambda mu, n_=prev.n: ([mu] if sum(mu) < n_ else []) + young_down(mu)
        else:
            kind = "ind"
            rule = lambda lam: [lam] + young_up(lam)
        edges = [{"from": list(a), "to": list(b)} for a in prev.mult for b in rule(a)]
        levels.append({"step": step, "kind": kind, "n": cur.n,
                       "nodes": [{"partition": list(p), "mult": m} for p, m in cur.mult.items()],
                       "edges": edges})
    return levels


def bratteli_emit(k: int, n: int, fmt: str = "json") -> str:
    levels = bratteli_levels(k, n)
    if fmt == "json":
        return json.dumps({"levels": levels}, indent=2)
    if fmt == "dot":
        return _to_dot(levels)
    raise ValueError(f"unknown format {fmt!r}; expected dot or json")


def _node_id(step: int, p: Iterable[int]) -> str:
    return f"s{step}_" + ("_".join(map(str, p)) or "e")


def _to_dot(levels: list[dict]) -> str:
    lines = ["digraph bratteli {", "  rankdir=TB;", "  node [shape=box];"]
    for lvl in levels:
        s = lvl["step"]
        lines.append(f"  subgraph level{s} {{")
        lines.append("    rank=same;")
        for node in lvl["nodes"]:
            label = format_partition(tuple(node["partition"]))
            lines.append(f'    {_node_id(s, node["partition"])} [label="{label} ({node["mult"]})"];')
        lines.append("  }")
    for lvl in levels[1:]:
        s = lvl["step"]
        for e in lvl["edges"]:
            lines.append(f"  {_node_id(s - 1, e['from'])} -> {_node_id(s, e['to'])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_bratteli_json(text: str) -> list[GrothendieckVector]:
    data = json.loads(text)
    return [GrothendieckVector(lvl["n"], {tuple(nd["partition"]): nd["mult"] for nd in lvl["nodes"]})
            for lvl in data["levels"]]

