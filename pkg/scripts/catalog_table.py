"""Calibrated engine values for every catalog link next to the oracle's Jones polynomial."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from spinnet_jones import PlatSpec, calibrated_jones, eval_at_root, jones_polynomial
from spinnet_jones.oracle import load_catalog


@dataclass(frozen=True)
class CatalogConfig:
    ks: tuple[int, ...] = (5, 7, 8, 12)
    catalog: str | None = None


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, action="append", help="repeatable; default 5 7 8 12")
    p.add_argument("--catalog")
    a = p.parse_args()
    cfg = CatalogConfig(tuple(a.k) if a.k else CatalogConfig.ks, a.catalog)

    print("link,k,engine_re,engine_im,oracle_re,oracle_im,delta,jones")
    for name, entry in load_catalog(cfg.catalog).items():
        for k in cfg.ks:
            spec = PlatSpec.from_dict({**entry, "level": k})
            poly = jones_polynomial(spec)
            e = calibrated_jones(spec)
            o = eval_at_root(poly, spec.ctx, sqrt_sign=-1)
            print(f"{name},{k},{e.real:.12g},{e.imag:.12g},{o.real:.12g},{o.imag:.12g},{abs(e - o):.1e},\"{poly}\"")


if __name__ == "__main__":
    main()
