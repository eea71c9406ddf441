"""Integer combinatorics: partitions, tableaux, Bell/Stirling numbers, Young's lattice walks.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty partition is ``()``.  Standard tableaux are tuples of rows.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must be bracketed: {text!r}")
    body = text[1:-1].strip()
    lam = tuple(int(p) for p in body.split(",")) if body else ()
    if not is_partition(lam):
        raise ValueError(f"not a partition: {text!r}")
    return lam


# ---------------------------------------------------------------------------
# counting


@lru_cache(maxsize=None)
def stirling2(r: int, i: int) -> int:
    """Number of set partitions of an r-set into exactly i blocks."""
    if r == 0 and i == 0:
        return 1
    if r == 0 or i == 0 or i > r:
        return 0
    return i * stirling2(r - 1, i) + stirling2(r - 1, i - 1)


@lru_cache(maxsize=None)
def bell(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(stirling2(k, i) for i in range(k + 1))


def generalized_bell(n: int, k: int) -> int:
    """Number of set partitions of [n+k] in which 1..n lie in distinct blocks.

    Each of the k free elements either joins one of the n distinguished
    blocks or is partitioned among the rest.
    """
    return sum(comb(k, i) * n**i * bell(k - i) for i in range(k + 1))


def marked_partition_count(k: int, j: int) -> int:
    """Set partitions of [k] with exactly j of their blocks marked."""
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k")
    return sum(stirling2(k, t) * comb(t, j) for t in range(j, k + 1))


# ---------------------------------------------------------------------------
# partitions and Young's lattice


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int) -> tuple[Partition, ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int) -> list[Partition]:
    """All partitions of m, lexicographically decreasing."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return list(_partitions(m, m))


def partitions_up_to(k: int) -> list[Partition]:
    return [lam for m in range(k + 1) for lam in partitions_of(m)]


def compositions_of(m: int) -> list[tuple[int, ...]]:
    """All compositions of m (ordered tuples of positive parts), lexicographic."""
    if m == 0:
        return [()]
    return [(first,) + rest for first in range(1, m + 1) for rest in compositions_of(m - first)]


def young_up(lam: Partition) -> list[Partition]:
    """Partitions obtained by adding one addable node, in lex-decreasing order."""
    out = []
    for r in range(len(lam) + 1):
        above = lam[r - 1] if r > 0 else None
        cur = lam[r] if r < len(lam) else 0
        if above is None or cur < above:
            new = list(lam)
            if r < len(lam):
                new[r] += 1
            else:
                new.append(1)
            out.append(tuple(new))
    return sorted(out, reverse=True)


def young_down(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one removable node, in lex-decreasing order."""
    out = []
    for r in range(len(lam)):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > below:
            new = list(lam)
            new[r] -= 1
            if new[r] == 0:
                new.pop()
            out.append(tuple(new))
    return sorted(out, reverse=True)


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r])]


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0] if lam else 0))


def syt_count(lam: Partition) -> int:
    """f^lambda by the hook-length formula."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def _syt(lam: Partition) -> tuple[Tableau, ...]:
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []
    # the largest entry sits in a removable corner
    for r in range(len(lam)):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > below:
            smaller = list(lam)
            smaller[r] -= 1
            if smaller[r] == 0:
                smaller.pop()
            for t in _syt(tuple(smaller)):
                rows = [list(row) for row in t]
                if r < len(rows):
                    rows[r].append(n)
                else:
                    rows.append([n])
                out.append(tuple(tuple(row) for row in rows))
    out.sort(key=reading_word)
    return tuple(out)


def reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(x for row in t for x in row)


def syt_list(lam: Partition) -> list[Tableau]:
    """All standard Young tableaux of shape lam, ordered by row-reading word."""
    return list(_syt(tuple(lam)))


def is_standard(t: Tableau) -> bool:
    entries = sorted(reading_word(t))
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(t):
        if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
            return False
        if r > 0 and any(t[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True


# ---------------------------------------------------------------------------
# simplified vacillating tableaux


@lru_cache(maxsize=None)
def _vacillating_table(k: int) -> dict[Partition, int]:
    counts: dict[Partition, int] = {(): 1}
    for _ in range(k):
        nxt: dict[Partition, int] = {}
        for lam, c in counts.items():
            for mu in [lam, *young_down(lam)]:
                nxt[mu] = nxt.get(mu, 0) + c
        counts, nxt = nxt, {}
        for lam, c in counts.items():
            for mu in [lam, *young_up(lam)]:
                nxt[mu] = nxt.get(mu, 0) + c
        counts = nxt
    return counts


def vacillating_count(k: int, mu: Partition) -> int:
    """g_k(mu): walks of 2k steps from the empty shape, alternately
    optionally removing then optionally adding a node, ending at mu."""
    if sum(mu) > k:
        return 0
    return _vacillating_table(k).get(tuple(mu), 0)


# ---------------------------------------------------------------------------
# set partitions


def set_partitions(elements: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``elements`` as tuples of blocks.

    Blocks are sorted internally and ordered by their first element, following
    the order of ``elements``; enumeration follows restricted growth strings.
    """
    elements = list(elements)
    n = len(elements)
    if n == 0:
        yield ()
        return
    for rgs in restricted_growth_strings(n):
        blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
        for x, b in zip(elements, rgs):
            blocks[b].append(x)
        yield tuple(tuple(b) for b in blocks)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]
