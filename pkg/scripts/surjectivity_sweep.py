"""Rank of P_k(delta) acting on W_{k,n} against dim End_{R_n}(W_{k,n}).

For each (k, n) and each delta in a grid, prints the image rank, the
commutant dimension, and whether delta avoids the degenerate set
{0, 1, ..., 2k-2}.

    python3 scripts/surjectivity_sweep.py --kmax 3 --nmax 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from diagramma.claims import is_semisimple
from diagramma.wbimodule import image_rank, w_commutant_dim


@dataclass
class SurjectivityConfig:
    kmax: int = 3
    nmax: int = 3
    deltas: list[Fraction] = field(
        default_factory=lambda: [Fraction(q) for q in (-1, 0, 1, 2, 3, 4, 5)] + [Fraction(7, 2)])


def main(cfg: SurjectivityConfig) -> None:
    print("k\tn\tdelta\timage_rank\tcommutant\tsurjective\tsemisimple")
    for k in range(1, cfg.kmax + 1):
        for n in range(1, cfg.nmax + 1):
            t0 = time.perf_counter()
            comm = w_commutant_dim(k, n)
            for q in cfg.deltas:
                r = image_rank(k, n, q)
                print(f"{k}\t{n}\t{q}\t{r}\t{comm}\t{r == comm}\t{is_semisimple(k, q)}")
            print(f"# k={k} n={n} took {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=3)
    a = ap.parse_args()
    main(SurjectivityConfig(a.kmax, a.nmax))
