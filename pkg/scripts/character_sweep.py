"""Sweep chi_{P_k^lam}(d_mu) against its expansion over the subalgebras I(X, Y, xi).

Prints one TSV row per (k, delta, mu, lam) and a final tally.

    python3 scripts/character_sweep.py --kmax 3 --deltas 5 7/2 -3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from diagramma.combinatorics import compositions_of, format_partition, partitions_up_to
from diagramma.reps import thm_cr_sides


@dataclass
class SweepConfig:
    kmax: int = 3
    deltas: list[Fraction] = field(default_factory=lambda: [Fraction(5), Fraction(7, 2)])


def main(cfg: SweepConfig) -> int:
    print("k\tdelta\tmu\tlambda\tlhs\trhs")
    bad = total = 0
    start = time.perf_counter()
    for q in cfg.deltas:
        for k in range(1, cfg.kmax + 1):
            for m in range(k + 1):
                for mu in compositions_of(m):
                    for lam in partitions_up_to(k):
                        lhs, rhs = thm_cr_sides(k, mu, lam, q)
                        total += 1
                        bad += lhs != rhs
                        print(f"{k}\t{q}\t{list(mu)}\t{format_partition(lam)}\t{lhs}\t{rhs}")
    print(f"# {total - bad}/{total} equal in {time.perf_counter() - start:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--deltas", nargs="+", type=Fraction, default=[Fraction(5), Fraction(7, 2)])
    a = ap.parse_args()
    if any(q == 0 for q in a.deltas):
        ap.error("delta must be nonzero")
    raise SystemExit(main(SweepConfig(a.kmax, a.deltas)))
