"""Robinson-Schensted correspondence for n-restricted set partitions.

The nonzero letters j of a vector, each with its class G_j of positions,
form a two-line array (j, G_j).  Row insertion of the blocks G_j (compared
by their minima) gives a tableau P of blocks, the letters record a
standard-shaped tableau Q, and the zero parts sorted by minimum form T.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import bell, generalized_bell, partitions_of, stirling2, syt_count
from .wbimodule import RestrictedSetPartition, WBasisVector, from_restricted, restricted_partitions, to_restricted

Block = tuple[int, ...]


@dataclass(frozen=True)
class RskTriple:
    n: int
    k: int
    P: tuple[tuple[Block, ...], ...]
    Q: tuple[tuple[int, ...], ...]
    T: tuple[Block, ...]

    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.P)

    def validate(self) -> None:
        if self.shape() != tuple(len(r) for r in self.Q):
            raise ValueError("P and Q have different shapes")
        entries = [x for row in self.P for b in row for x in b] + [x for b in self.T for x in b]
        if sorted(entries) != list(range(1, self.k + 1)):
            raise ValueError(f"blocks of P and T must partition [{self.k}]")
        letters = [x for row in self.Q for x in row]
        if len(set(letters)) != len(letters) or any(not 1 <= x <= self.n for x in letters):
            raise ValueError(f"Q must have distinct entries from [{self.n}]")
        for tab in (tuple(tuple(min(b) for b in row) for row in self.P), self.Q):
            for r, row in enumerate(tab):
                if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
                    raise ValueError("rows must increase")
                if r and any(tab[r - 1][c] >= row[c] for c in range(len(row))):
                    raise ValueError("columns must increase")
        if list(self.T) != sorted(self.T, key=min):
            raise ValueError("T must be ordered by minima")

    def to_json(self) -> dict:
        return {
            "P": [[list(b) for b in row] for row in self.P],
            "Q": [list(row) for row in self.Q],
            "T": [list(b) for b in self.T],
        }


def _insert(P: list[list[Block]], block: Block) -> int:
    """Row-insert ``block``; returns the index of the row that grew."""
    r = 0
    while True:
        if r == len(P):
            P.append([block])
            return r
        row = P[r]
        for c, b in enumerate(row):
            if min(b) > min(block):
                row[c], block = block, b
                break
        else:
            row.append(block)
            return r
        r += 1


def _uninsert(P: list[list[Block]], r: int) -> Block:
    """Remove the last cell of row r and bump it back out of the top row."""
    block = P[r].pop()
    if not P[r]:
        P.pop()
    for rr in range(r - 1, -1, -1):
        row = P[rr]
        # the largest entry smaller than block
        c = max(i for i, b in enumerate(row) if min(b) < min(block))
        row[c], block = block, row[c]
    return block


def rsk_forward_vector(x: WBasisVector) -> RskTriple:
    P: list[list[Block]] = []
    Q: list[list[int]] = []
    for letter, G in x.letter_classes().items():
        r = _insert(P, G)
        if r == len(Q):
            Q.append([])
        Q[r].append(letter)
    T = tuple(sorted(x.zeroparts, key=min))
    return RskTriple(x.n, x.k, tuple(tuple(r) for r in P), tuple(tuple(r) for r in Q), T)


def rsk_forward(p: RestrictedSetPartition) -> RskTriple:
    return rsk_forward_vector(from_restricted(p))


def rsk_backward(t: RskTriple) -> RestrictedSetPartition:
    t.validate()
    P = [list(r) for r in t.P]
    Q = [list(r) for r in t.Q]
    word = [0] * t.k
    while Q:
        # the largest letter sits at the end of some row
        r = max(range(len(Q)), key=lambda i: Q[i][-1])
        letter = Q[r].pop()
        if not Q[r]:
            Q.pop()
        for j in _uninsert(P, r):
            word[j - 1] = letter
    x = WBasisVector(t.k, t.n, tuple(word), t.T)
    return to_restricted(x)


def rsk_count_formula(n: int, k: int) -> int:
    """Sum over lam |- i <= min(n,k) and r = i..k of
    C(n,i) C(k,r) S(r,i) B(k-r) (f^lam)^2."""
    total = 0
    for i in range(min(n, k) + 1):
        f2 = sum(syt_count(lam) ** 2 for lam in partitions_of(i))
        for r in range(i, k + 1):
            total += comb(n, i) * comb(k, r) * stirling2(r, i) * bell(k - r) * f2
    return total


def rsk_count_check(n: int, k: int, enumerate_: bool = False) -> dict:
    lhs = generalized_bell(n, k)
    rhs = rsk_count_formula(n, k)
    report = {"n": n, "k": k, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}
    if enumerate_:
        report["enumerated"] = sum(1 for _ in restricted_partitions(n, k))
        report["equal"] = report["equal"] and report["enumerated"] == lhs
    return report


def rsk_roundtrip(n: int, k: int) -> dict:
    """Apply backward after forward to every n-restricted partition of [n+k]."""
    total = failures = 0
    for p in restricted_partitions(n, k):
        t = rsk_forward(p)
        t.validate()
        total += 1
        failures += rsk_backward(t) != p
    return {"n": n, "k": k, "count": total, "failures": failures, "equal": failures == 0}
