"""Verification sweeps behind ``diagramma verify``.

Each claim returns a JSON-ready report with both sides of every identity
it checked: ``{claim, parameters, cases, lhs, rhs, equal, elapsed_ms}``
where ``lhs[i]`` and ``rhs[i]`` belong to ``cases[i]``.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable

from .combinatorics import (
    bell,
    compositions_of,
    generalized_bell,
    marked_partition_count,
    partitions_up_to,
    syt_count,
    vacillating_count,
)
from .diagrams import d_mu, enumerate_diagrams, vconcat
from .exactlinalg import DeltaScalar, format_poly
from .reps import rook_simple_module, standard_module, thm_cr_sides, trace_of
from .rook import (
    GrothendieckVector,
    decompose_by_character,
    enumerate_rook,
    iterate_ind_res,
    natural_module,
    tensor_power,
)
from .rsk import rsk_count_check, rsk_roundtrip
from .wbimodule import (
    act_left,
    act_right,
    bitrace,
    decompose_w,
    from_restricted,
    image_rank,
    restricted_partitions,
    to_restricted,
    w_basis,
    w_commutant_dim,
)

CLAIMS = ("thm1", "prop2", "act", "thmcr", "thmkey", "thmmain2", "lemma61", "rskcount")


@dataclass
class VerifyConfig:
    k: int = 2
    n: int | None = None
    delta: Fraction | None = None
    seed: int = 0
    samples: int = 500
    threads: int | None = None

    def __post_init__(self):
        if self.n is None:
            self.n = self.k
        if self.threads is None:
            self.threads = int(os.environ.get("DIAGRAMMA_THREADS", "1") or 1)
        self.threads = max(1, self.threads)


def jsonable(x: Any) -> Any:
    if isinstance(x, DeltaScalar):
        return format_poly(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, GrothendieckVector):
        return {"n": x.n, "mult": [{"partition": list(p), "mult": m} for p, m in x.mult.items()]}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _run(claim: str, cfg: VerifyConfig, params: dict, cases: Iterable[tuple[dict, Callable[[], tuple]]]) -> dict:
    start = time.perf_counter()
    cases = list(cases)
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        results = list(pool.map(lambda c: c[1](), cases))
    lhs = [r[0] for r in results]
    rhs = [r[1] for r in results]
    ok = [r[2] if len(r) > 2 else r[0] == r[1] for r in results]
    return {
        "claim": claim,
        "parameters": params,
        "cases": [c[0] for c in cases],
        "lhs": jsonable(lhs),
        "rhs": jsonable(rhs),
        "equal": all(ok),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }


# ---------------------------------------------------------------------------


def verify_thm1(cfg: VerifyConfig) -> dict:
    """W_{k,n} = sum_i C(k,i) B(k-i) (C^n)^{(x) i} in the Grothendieck group."""
    k, n = cfg.k, cfg.n

    def case():
        lhs = decompose_w(k, n)
        rhs = GrothendieckVector(n, {})
        for i in range(k + 1):
            v = decompose_by_character(tensor_power(natural_module(n), i, n), n)
            rhs = rhs + GrothendieckVector(n, {p: m * comb(k, i) * bell(k - i) for p, m in v.mult.items()})
        return lhs, rhs

    return _run("thm1", cfg, {"k": k, "n": n}, [({"k": k, "n": n}, case)])


def verify_prop2(cfg: VerifyConfig) -> dict:
    """from_restricted/to_restricted are inverse bijections; counts agree."""
    k, n = cfg.k, cfg.n

    def case():
        parts = list(restricted_partitions(n, k))
        images = [from_restricted(p) for p in parts]
        back = sum(to_restricted(x) == p for x, p in zip(images, parts))
        onto = set(images) == set(w_basis(k, n))
        lhs = {"restricted_partitions": len(parts), "round_trips": back, "onto_basis": onto}
        rhs = {"generalized_bell": generalized_bell(n, k)}
        ok = len(parts) == back == generalized_bell(n, k) == len(w_basis(k, n)) and onto
        return lhs, rhs, ok

    return _run("prop2", cfg, {"k": k, "n": n}, [({"k": k, "n": n}, case)])


def _right(x, d):
    hit = act_right(x, d)
    return None if hit is None else (hit[0], hit[1])


def verify_act(cfg: VerifyConfig) -> dict:
    """(x d1) d2 = x (d1 d2) and sigma (x d) = (sigma x) d, symbolic delta.

    Exhaustive for k <= 2, otherwise ``cfg.samples`` seeded random triples.
    """
    k, n = cfg.k, cfg.n
    A = enumerate_diagrams(k)
    basis = w_basis(k, n)
    if k <= 2:
        triples = [(x, a, b) for x in basis for a in A for b in A]
    else:
        rng = random.Random(cfg.seed)
        triples = [(rng.choice(basis), rng.choice(A), rng.choice(A)) for _ in range(cfg.samples)]

    def assoc():
        good = 0
        for x, a, b in triples:
            first = _right(x, a)
            lhs = None
            if first is not None:
                second = _right(first[1], b)
                if second is not None:
                    lhs = (first[0] * second[0], second[1])
            e, c = vconcat(a, b)
            whole = _right(x, e)
            rhs = None if whole is None else (whole[0] * DeltaScalar.monomial(c), whole[1])
            good += lhs == rhs
        return good, len(triples)

    def commute():
        good = total = 0
        for sigma in enumerate_rook(n):
            for x in basis:
                for d in A if k <= 2 else A[:: max(1, len(A) // 20)]:
                    total += 1
                    xd = _right(x, d)
                    lhs = None
                    if xd is not None:
                        y = act_left(sigma, xd[1])
                        lhs = None if y is None else (xd[0], y)
                    sx = act_left(sigma, x)
                    rhs = None if sx is None else _right(sx, d)
                    good += lhs == rhs
        return good, total

    cases = [({"check": "associativity", "triples": len(triples)}, assoc),
             ({"check": "left-right commuting"}, commute)]
    return _run("act", cfg, {"k": k, "n": n}, cases)


def verify_thmcr(cfg: VerifyConfig) -> dict:
    """chi_{P_k^lam}(d_mu) against the sum over I(X, Y, xi); all compositions mu of m <= k."""
    k = cfg.k
    delta = cfg.delta if cfg.delta is not None else Fraction(5)
    cases = []
    for m in range(k + 1):
        for mu in compositions_of(m):
            for lam in partitions_up_to(k):
                cases.append(({"mu": list(mu), "lambda": list(lam)},
                              lambda mu=mu, lam=lam: thm_cr_sides(k, mu, lam, delta)))
    return _run("thmcr", cfg, {"k": k, "delta": str(delta)}, cases)


def verify_thmkey(cfg: VerifyConfig) -> dict:
    """bitrace(sigma, d_mu) = sum_lam chi_{R_n^lam}(sigma) chi_{P_k^lam}(d_mu), symbolic delta."""
    k, n = cfg.k, cfg.n
    lams = [lam for lam in partitions_up_to(min(k, n))]
    R = {lam: rook_simple_module(n, lam) for lam in lams}
    P = {lam: standard_module(k, lam) for lam in lams}
    cases = []
    for m in range(k + 1):
        for mu in compositions_of(m):
            dm = d_mu(k, mu)
            for sigma in enumerate_rook(n):
                def case(sigma=sigma, dm=dm):
                    rhs = DeltaScalar()
                    for lam in lams:
                        rhs = rhs + trace_of(R[lam], sigma) * trace_of(P[lam], dm)
                    return bitrace(sigma, dm, n), rhs
                cases.append(({"sigma": list(sigma), "mu": list(mu)}, case))
    return _run("thmkey", cfg, {"k": k, "n": n}, cases)


def is_semisimple(k: int, delta: Fraction) -> bool:
    """P_k(delta) is semisimple iff delta is not in {0, 1, ..., 2k-2}."""
    return not (delta.denominator == 1 and 0 <= delta <= 2 * k - 2)


def verify_thmmain2(cfg: VerifyConfig) -> dict:
    """Surjectivity of P_k(delta) -> End_{R_n}(W_{k,n}) against semisimplicity.

    Semisimple implies surjective; for n >= k and delta != 0 the converse holds.
    """
    k, n = cfg.k, cfg.n
    deltas = [cfg.delta] if cfg.delta is not None else [Fraction(q) for q in (0, 1, 2, 5, Fraction(7, 2), -1)]
    comm = w_commutant_dim(k, n)
    cases = []
    for q in deltas:
        def case(q=q):
            r = image_rank(k, n, q)
            surj = r == comm
            ss = is_semisimple(k, q)
            ok = surj == ss if (n >= k and q != 0) else (surj or not ss)
            return {"image_rank": r, "surjective": surj}, {"commutant_dim": comm, "semisimple": ss}, ok
        cases.append(({"delta": str(q)}, case))
    return _run("thmmain2", cfg, {"k": k, "n": n}, cases)


def verify_lemma61(cfg: VerifyConfig) -> dict:
    """g_k(lam) = B(k,|lam|) f^lam, and length/dimension of (Ind Res)^k(C_triv) for n >= k."""
    k, n = cfg.k, cfg.n
    cases = []
    for lam in partitions_up_to(k):
        cases.append(({"lambda": list(lam)},
                      lambda lam=lam: (vacillating_count(k, lam), marked_partition_count(k, sum(lam)) * syt_count(lam))))
    final = iterate_ind_res(k, n)[-1]
    lams = [lam for lam in partitions_up_to(k) if sum(lam) <= n]
    cases.append(({"check": "length"},
                  lambda: (sum(final.mult.values()), sum(vacillating_count(k, lam) for lam in lams))))
    cases.append(({"check": "dimension"},
                  lambda: (final.dim(), sum(vacillating_count(k, lam) * syt_count(lam) * comb(n, sum(lam)) for lam in lams))))
    cases.append(({"check": "dim W"}, lambda: (len(w_basis(k, n)), final.dim())))
    return _run("lemma61", cfg, {"k": k, "n": n}, cases)


def verify_rskcount(cfg: VerifyConfig) -> dict:
    k, n = cfg.k, cfg.n

    def count():
        rep = rsk_count_check(n, k, enumerate_=True)
        return {"generalized_bell": rep["lhs"], "enumerated": rep["enumerated"]}, {"formula": rep["rhs"]}, rep["equal"]

    def roundtrip():
        rep = rsk_roundtrip(n, k)
        return rep["count"] - rep["failures"], rep["count"]

    return _run("rskcount", cfg, {"k": k, "n": n},
                [({"check": "count"}, count), ({"check": "roundtrip"}, roundtrip)])


VERIFIERS: dict[str, Callable[[VerifyConfig], dict]] = {
    "thm1": verify_thm1,
    "prop2": verify_prop2,
    "act": verify_act,
    "thmcr": verify_thmcr,
    "thmkey": verify_thmkey,
    "thmmain2": verify_thmmain2,
    "lemma61": verify_lemma61,
    "rskcount": verify_rskcount,
}


def verify(claim: str, cfg: VerifyConfig) -> dict:
    if claim not in VERIFIERS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    return VERIFIERS[claim](cfg)
