"""Index character on T(q^k): series values, closed form, and the certificate."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from paramodular.characters import index_character, index_closed_form, series_certificate


@dataclass
class IndexConfig:
    kmax: int = 10
    at_q: int | None = None  # also print numeric values at this q


def run(cfg: IndexConfig) -> int:
    chi = index_character()
    cert = series_certificate(chi, max(cfg.kmax, 3))
    bad = 0
    for k in range(cfg.kmax + 1):
        value = cert.S.coeffs[k].to_polyq()
        closed = index_closed_form(k)
        bad += value != closed
        extra = f"\t(q={cfg.at_q}: {value(cfg.at_q)})" if cfg.at_q is not None else ""
        print(f"{k}\t{value}{extra}" + ("" if value == closed else "\tCLOSED FORM DIFFERS"))
    print(f"certificate valid through t^{cert.order}: {cert.valid}")
    return 0 if cert.valid and not bad else 1


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--kmax", type=int, default=IndexConfig.kmax)
    p.add_argument("--at-q", type=int, default=None)
    args = p.parse_args()
    return run(IndexConfig(kmax=args.kmax, at_q=args.at_q))


if __name__ == "__main__":
    raise SystemExit(main())
