"""Recover both multiplication tables from the rewriting engine.

For every (a, b, c) in S with c <= cmax, X*T(a,b,c) and Y1*T(a,b,c) are
computed through the monomial basis and the coefficients on the five (resp.
six) target cosets are printed next to the selected table row.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from paramodular.cosets import (
    CosetEngine,
    T,
    deg1_row,
    deg1_targets,
    deg2_row,
    deg2_targets,
    in_S,
    label,
)


@dataclass
class TableConfig:
    cmax: int = 6
    which: str = "both"  # "x", "y1" or "both"


def recovered(eng: CosetEngine, left, targets, a, b, c) -> list[str]:
    prod = eng.coset_mul(left, T(a, b, c))
    out = []
    for d, e, f, g in targets:
        out.append(str(prod.coefficient(label(d, e, f, g))) if in_S(e, f, g) else "0")
    return out


def run(cfg: TableConfig) -> int:
    eng = CosetEngine()
    mismatches = 0
    for c in range(cfg.cmax + 1):
        for a in range(c // 2 + 1):
            for b in range(c // 2 + 1):
                for tag, row, targets, left in (("X", deg1_row, deg1_targets, T(0, 0, 1)),
                                                ("Y1", deg2_row, deg2_targets, T(0, 1, 2))):
                    if cfg.which not in ("both", tag.lower()):
                        continue
                    name, coeffs = row(a, b, c)
                    tgts = targets(a, b, c)
                    table = [str(k) if in_S(*t[1:]) else "0" for k, t in zip(coeffs, tgts)]
                    got = recovered(eng, left, tgts, a, b, c)
                    flag = "" if got == table else "  MISMATCH"
                    mismatches += bool(flag)
                    print(f"{tag:2} T({a},{b},{c}) [{name}] " + ", ".join(got) + flag)
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cmax", type=int, default=TableConfig.cmax)
    p.add_argument("--which", choices=("x", "y1", "both"), default=TableConfig.which)
    args = p.parse_args()
    return run(TableConfig(cmax=args.cmax, which=args.which))


if __name__ == "__main__":
    raise SystemExit(main())
