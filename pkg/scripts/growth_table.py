"""Coupling-graph diameters against n ln n, for the rotation graph and the twist-rotation graph."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from spinnet_jones.spinnet_graph import N_MAX_TWISTS, growth_check


@dataclass(frozen=True)
class GrowthConfig:
    n_max: int = 8
    n_max_twists: int = N_MAX_TWISTS
    out: str | None = None


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=GrowthConfig.n_max)
    p.add_argument("--n-max-twists", type=int, default=GrowthConfig.n_max_twists)
    p.add_argument("--out", help="write the rotation-graph CSV here")
    a = p.parse_args()
    cfg = GrowthConfig(a.n_max, a.n_max_twists, a.out)

    rot = growth_check(cfg.n_max)
    print("# rotation graph, fixed leaf order")
    sys.stdout.write(rot.to_csv())
    print(f"# fitted c = {rot.constant:.4f}, spread x{rot.spread:.3f}, monotone {rot.monotone}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(rot.to_csv())

    tw = growth_check(cfg.n_max_twists, include_twists=True)
    print("# twist-rotation graph, all leaf orders")
    sys.stdout.write(tw.to_csv())
    print(f"# fitted c = {tw.constant:.4f}, spread x{tw.spread:.3f}, monotone {tw.monotone}")


if __name__ == "__main__":
    main()
