"""Independent reference values, frozen to tests/data/oracles.json.

Nothing here imports diagramma: set partitions come from sympy, connectivity
from networkx, ranks and nullspaces from sympy matrices, and W_{k,n} is
modelled directly as restricted set partitions of letters plus positions.

    python3 scripts/build_oracles.py
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import networkx as nx
import sympy as sp
from sympy.utilities.iterables import multiset_partitions

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"
d = sp.Symbol("d")


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    yield from multiset_partitions(items)


def diagrams(k):
    verts = [("t", i) for i in range(1, k + 1)] + [("b", i) for i in range(1, k + 1)]
    return [frozenset(frozenset(b) for b in p) for p in set_partitions(verts)]


def compose(d1, d2, k):
    """Stack d1 over d2; returns (blocks, middle-only components)."""
    g = nx.Graph()
    for i in range(1, k + 1):
        g.add_node(("t", i))
        g.add_node(("m", i))
        g.add_node(("b", i))
    for B in d1:
        nodes = [("t", j) if s == "t" else ("m", j) for s, j in B]
        nx.add_path(g, nodes)
    for B in d2:
        nodes = [("m", j) if s == "t" else ("b", j) for s, j in B]
        nx.add_path(g, nodes)
    out, c = [], 0
    for comp in nx.connected_components(g):
        kept = frozenset(v for v in comp if v[0] != "m")
        if kept:
            out.append(kept)
        else:
            c += 1
    return frozenset(out), c


def d_mu(k, mu):
    blocks, start = [], 0
    for part in mu:
        for j in range(part):
            blocks.append({("t", start + j + 1), ("b", start + (j + 1) % part + 1)})
        start += part
    for j in range(start + 1, k + 1):
        blocks += [{("t", j)}, {("b", j)}]
    return frozenset(frozenset(b) for b in blocks)


# ---------------------------------------------------------------------------


def regular_traces(k, mus):
    """trace of left multiplication by d_mu on P_k(d), as polynomials."""
    A = diagrams(k)
    out = {}
    for mu in mus:
        dm = d_mu(k, mu)
        tr = 0
        for x in A:
            y, c = compose(dm, x, k)
            if y == x:
                tr += d**c
        out[",".join(map(str, mu))] = str(sp.expand(tr))
    return out


def w_model(k, n):
    """Basis: partitions of letters L1..Ln and positions 1..k, letters apart."""
    items = [("L", l) for l in range(1, n + 1)] + [("p", j) for j in range(1, k + 1)]
    basis = []
    for p in set_partitions(items):
        if all(sum(1 for v in B if v[0] == "L") <= 1 for B in p):
            basis.append(frozenset(frozenset(B) for B in p))
    return basis


def w_act(x, dg, k):
    g = nx.Graph()
    for B in x:
        nodes = [v if v[0] == "L" else ("m", v[1]) for v in B]
        g.add_nodes_from(nodes)
        nx.add_path(g, nodes)
    for B in dg:
        nx.add_path(g, [("m", j) if s == "t" else ("p", j) for s, j in B])
    used = {v[1] for B in x for v in B if v[0] == "L" and len(B) > 1}
    out, c = [], 0
    for comp in nx.connected_components(g):
        letters = [v for v in comp if v[0] == "L"]
        if len(letters) > 1:
            return None
        kept = frozenset(v for v in comp if v[0] != "m")
        if not kept:
            c += 1
            continue
        if letters and letters[0][1] in used and len(kept) == 1:
            return None
        out.append(kept)
    return frozenset(out), c


def image_rank_oracle(k, n, q):
    basis = w_model(k, n)
    idx = {b: i for i, b in enumerate(basis)}
    rows = []
    for dg in diagrams(k):
        m = sp.zeros(len(basis), len(basis))
        for i, x in enumerate(basis):
            hit = w_act(x, dg, k)
            if hit:
                y, c = hit
                m[i, idx[y]] += sp.Rational(q) ** c
        rows.append(list(m))
    return sp.Matrix(rows).rank()


def commutant_oracle(k, n):
    """dim of matrices commuting with all of R_n acting on letters."""
    basis = w_model(k, n)
    idx = {b: i for i, b in enumerate(basis)}
    N = len(basis)

    def act(sigma, x):
        new = []
        for B in x:
            nb = set()
            for v in B:
                if v[0] == "L":
                    if len(B) > 1 and sigma[v[1] - 1] == 0:
                        return None
                else:
                    nb.add(v)
            new.append(nb)
        # relabel letters; singleton letters are implicit
        res = []
        for B, nb in zip(x, new):
            letters = [v for v in B if v[0] == "L"]
            if letters and len(B) > 1:
                nb.add(("L", sigma[letters[0][1] - 1]))
            if nb:
                res.append(frozenset(nb))
        present = {v[1] for B in res for v in B if v[0] == "L"}
        res += [frozenset({("L", l)}) for l in range(1, len(sigma) + 1) if l not in present]
        return frozenset(res)

    gens = []
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        gens.append(p)
    gens.append([j if j < n else 0 for j in range(1, n + 1)])
    eqs = []
    X = sp.Matrix(N, N, lambda i, j: sp.Symbol(f"x_{i}_{j}"))
    for sigma in gens:
        M = sp.zeros(N, N)
        for j, x in enumerate(basis):
            y = act(sigma, x)
            if y is not None:
                M[idx[y], j] = 1
        eqs.extend(list(X * M - M * X))
    syms = list(X)
    A, _ = sp.linear_eq_to_matrix([e for e in eqs if e != 0], syms)
    return N * N - A.rank()


def mn_character(lam, mu):
    """Murnaghan-Nakayama rule via border strips on beta-sets."""
    lam, mu = list(lam), list(mu)
    if not mu:
        return 1 if sum(lam) == 0 else 0
    r, rest = mu[0], mu[1:]
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        sign = (-1) ** sum(1 for c in beta if nb < c < b)
        new = sorted([c for c in beta if c != b] + [nb], reverse=True)
        shape = [new[j] - (L - 1 - j) for j in range(L)]
        shape = [p for p in shape if p > 0]
        total += sign * mn_character(shape, rest)
    return total


def partitions(m, largest=None):
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def main():
    data = {}
    data["bell"] = [int(sp.bell(i)) for i in range(9)]
    data["num_diagrams"] = {str(k): len(diagrams(k)) for k in range(4)}
    data["restricted_counts"] = {
        f"{n},{k}": len(w_model(k, n)) for n in range(5) for k in range(5) if n + k <= 7
    }
    data["rook_sizes"] = {
        str(n): sum(1 for m in itertools.product((0, 1), repeat=n * n)
                    if all(sum(m[i * n:(i + 1) * n]) <= 1 for i in range(n))
                    and all(sum(m[j::n]) <= 1 for j in range(n)))
        for n in range(4)
    }
    mus = [mu for m in range(4) for mu in partitions(m)]
    data["regular_traces"] = {str(k): regular_traces(k, [mu for mu in mus if sum(mu) <= k]) for k in (1, 2, 3)}
    data["sn_characters"] = {
        ",".join(map(str, lam)): {",".join(map(str, mu)): mn_character(lam, mu) for mu in partitions(sum(lam))}
        for m in range(1, 6) for lam in partitions(m)
    }
    data["image_rank"] = {f"{k},{n},{q}": image_rank_oracle(k, n, q)
                          for k, n in ((1, 1), (1, 2), (2, 2)) for q in (0, 1, 2, 5, -1)}
    data["commutant_dim"] = {f"{k},{n}": commutant_oracle(k, n) for k, n in ((1, 1), (1, 2), (2, 2), (2, 3))}
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
