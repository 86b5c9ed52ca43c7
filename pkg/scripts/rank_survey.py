"""Ranks of the algebra and its center by degree, with timings."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from paramodular.center import center_basis_rank, center_rank, hecke_hilbert_coeffs
from paramodular.cosets import coset_enumerate
from paramodular.hecke import monomial_basis, rank_formula


@dataclass
class SurveyConfig:
    kmax: int = 10


def run(cfg: SurveyConfig) -> int:
    hilbert = hecke_hilbert_coeffs(cfg.kmax)
    ok = True
    print("k\tformula\tmonomials\tcosets\tHilbert\tcenter\tcenter rank at q=2,3,5\tseconds")
    for k in range(cfg.kmax + 1):
        t0 = time.perf_counter()
        zr = center_basis_rank(k)
        row = (rank_formula(k), len(monomial_basis(k)), len(coset_enumerate(k)), hilbert[k])
        ok = ok and len(set(row)) == 1 and zr == [center_rank(k)] * 3
        print(f"{k}\t" + "\t".join(map(str, row)) + f"\t{center_rank(k)}\t{zr}\t{time.perf_counter() - t0:.2f}")
    return 0 if ok else 1


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--kmax", type=int, default=SurveyConfig.kmax)
    return run(SurveyConfig(kmax=p.parse_args().kmax))


if __name__ == "__main__":
    raise SystemExit(main())
