"""Calibrated trefoil values against (-1+q+q^3)/q^4 and its mirror over a range of k."""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from spinnet_jones import PlatSpec, QContext, calibrated_jones


@dataclass(frozen=True)
class SweepConfig:
    k_min: int = 5
    k_max: int = 16
    word: str = "s2 s2 s2"


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for k in range(cfg.k_min, cfg.k_max + 1):
        q = QContext(k).q
        closed = (-1 + q + q**3) / q**4
        value = calibrated_jones(PlatSpec(4, (1, 1), k, word=cfg.word))
        rows.append({
            "k": k,
            "re": value.real,
            "im": value.imag,
            "delta_printed": abs(value - closed),
            "delta_mirror": abs(value - closed.conjugate()),
        })
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-min", type=int, default=SweepConfig.k_min)
    p.add_argument("--k-max", type=int, default=SweepConfig.k_max)
    p.add_argument("--word", default=SweepConfig.word)
    a = p.parse_args()
    rows = run(SweepConfig(a.k_min, a.k_max, a.word))
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({key: (f"{v:.12g}" if isinstance(v, float) else v) for key, v in r.items()})


if __name__ == "__main__":
    main()
