"""Print the Ind/Res tower for R_n with per-level multiplicities.

    python3 scripts/bratteli_tower.py --k 3 --n 3
    python3 scripts/bratteli_tower.py --k 3 --n 3 --dot > tower.dot
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from diagramma.combinatorics import bell, format_partition, vacillating_count
from diagramma.rook import bratteli_emit, iterate_ind_res


@dataclass
class TowerConfig:
    k: int = 3
    n: int = 3
    dot: bool = False


def main(cfg: TowerConfig) -> None:
    if cfg.dot:
        print(bratteli_emit(cfg.k, cfg.n, "dot"), end="")
        return
    vectors = iterate_ind_res(cfg.k, cfg.n)
    for step, v in enumerate(vectors):
        kind = "start" if step == 0 else ("Res" if step % 2 else "Ind")
        cells = "  ".join(f"{format_partition(lam)}:{m}" for lam, m in v.mult.items())
        print(f"{step:2d} {kind:5s} R_{v.n}  {cells}")
    final = vectors[-1]
    print(f"sum of squares {final.sum_of_squares()}  B(2k) = {bell(2 * cfg.k)}")
    if cfg.n >= cfg.k:
        agree = all(m == vacillating_count(cfg.k, lam) for lam, m in final.mult.items())
        print(f"multiplicities equal vacillating tableau counts: {agree}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--dot", action="store_true")
    a = ap.parse_args()
    main(TowerConfig(a.k, a.n, a.dot))
