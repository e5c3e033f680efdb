"""Elementary-move counts against c(N) * kappa on random plat words."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

import numpy as np

from spinnet_jones import PlatSpec, complexity_ledger
from spinnet_jones.automaton import bound_constant, parity_distance
from spinnet_jones.braid import random_word


@dataclass(frozen=True)
class LedgerConfig:
    words: int = 500
    max_length: int = 20
    seed: int = 4
    strands: tuple[int, ...] = field(default=(4, 6, 8))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--words", type=int, default=LedgerConfig.words)
    p.add_argument("--max-length", type=int, default=LedgerConfig.max_length)
    p.add_argument("--seed", type=int, default=LedgerConfig.seed)
    a = p.parse_args()
    cfg = LedgerConfig(a.words, a.max_length, a.seed)

    rng = np.random.default_rng(cfg.seed)
    print("strands,c(N),odd_even_distance,words,max_ratio,mean_ratio,violations")
    for n in cfg.strands:
        ratios = []
        for _ in range(cfg.words // len(cfg.strands)):
            w = random_word(rng, n, int(rng.integers(1, cfg.max_length + 1)))
            moves, bound = complexity_ledger(PlatSpec(n, (1,) * (n // 2), 5), w)
            ratios.append(moves / bound)
        r = np.array(ratios)
        print(f"{n},{bound_constant(n // 2):.6f},{parity_distance(n)},{len(r)},{r.max():.4f},{r.mean():.4f},{int((r > 1).sum())}")


if __name__ == "__main__":
    main()
