"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .center import center_basis, center_hilbert_coeffs, center_monomials, is_central
from .characters import (
    Character,
    KindUnsupportedError,
    index_character,
    index_closed_form,
    series_certificate,
)
from .checks import ACCEPTANCE, INVARIANTS, run_checks
from .coeffs import MPoly, NonDivisibleError, PolyParseError, PolyQ, parse_poly
from .cosets import CosetElement, InvalidTripleError, default_engine, t_qk
from .expr import parse_element
from .hecke import HeckeElement, mul

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _qarray(p: PolyQ) -> list[str]:
    return [str(c) for c in p.coeffs]


def element_records(e: HeckeElement | CosetElement) -> list[dict]:
    if isinstance(e, HeckeElement):
        return [{"basis": "monomial", "exponents": list(m), "coefficients": _qarray(c)} for m, c in e]
    return [{"basis": "coset", "label": list(lab), "coefficients": _qarray(c)} for lab, c in e]


def _q_only(v) -> bool:
    return isinstance(v, MPoly) and all(not any(e[1:]) for e in v.terms)


def format_value(v) -> str:
    """Character values in Z[q] print like PolyQ (ascending); others as MPoly."""
    return str(v.to_polyq()) if _q_only(v) else str(v)


def _value_record(v) -> dict:
    rec = {"value": format_value(v)}
    if _q_only(v):
        rec["coefficients"] = _qarray(v.to_polyq())
    return rec


def _emit_element(e: HeckeElement | CosetElement, as_json: bool) -> None:
    print(json.dumps(element_records(e)) if as_json else str(e))


# ---------------------------------------------------------------------------
# commands


def cmd_mul(args) -> int:
    eng = default_engine()
    lhs, rhs = parse_element(args.lhs), parse_element(args.rhs)
    if args.basis == "coset":
        out = eng.coset_mul(lhs.to_coset(eng), rhs.to_coset(eng))
    else:
        out = mul(lhs.to_hecke(eng), rhs.to_hecke(eng))
    _emit_element(out, args.json)
    return EXIT_OK


def cmd_convert(args) -> int:
    expr = parse_element(args.expr)
    out = expr.to_coset() if args.to == "coset" else expr.to_hecke()
    _emit_element(out, args.json)
    return EXIT_OK


def cmd_tqk(args) -> int:
    out = t_qk(args.k)
    if args.basis == "monomial":
        out = default_engine().to_monomial(out)
    _emit_element(out, args.json)
    return EXIT_OK


def _param(text: str | None):
    if text is None or text == "symbolic":
        return None
    return parse_poly(text)


def character_from_args(args) -> Character:
    return Character(
        kind=args.char_kind,
        eps=args.eps,
        lam=_param(args.lam),
        mu=_param(args.mu),
        mu_target=args.mu_target,
    )


def cmd_series(args) -> int:
    chi = character_from_args(args)
    if args.order < 3:
        raise UsageError("--order must be at least 3")
    cert = series_certificate(chi, args.order)
    if args.json:
        print(json.dumps({
            "order": cert.order,
            "S": [_value_record(v) for v in cert.S.coeffs],
            "P": [_value_record(v) for v in cert.P.coeffs],
            "Q": [_value_record(v) for v in cert.Q.coeffs],
            "residual": [_value_record(v) for v in cert.residual.coeffs],
            "valid": cert.valid,
        }))
    else:
        for k, v in enumerate(cert.S.coeffs):
            print(f"S[{k}] = {format_value(v)}")
        print("P = " + " ; ".join(format_value(v) for v in cert.P.coeffs[:3]))
        print("Q = " + " ; ".join(format_value(v) for v in cert.Q.coeffs[:4]))
        print("residual = " + ("0" if cert.valid else str(cert.residual)))
    return EXIT_OK if cert.valid else EXIT_FAIL


def cmd_index_table(args) -> int:
    chi = index_character()
    rows = []
    ok = True
    for k in range(args.kmax + 1):
        value = chi.t_qk_value(k).to_polyq()
        closed = index_closed_form(k)
        ok = ok and value == closed
        rows.append((k, value, closed))
    if args.json:
        print(json.dumps([{"k": k, "coefficients": _qarray(v), "closed_form_agrees": v == c} for k, v, c in rows]))
    else:
        for k, v, c in rows:
            print(f"{k}\t{v}" + ("" if v == c else f"\tMISMATCH closed form {c}"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_center_basis(args) -> int:
    basis = center_basis(args.degree)
    mons = center_monomials(args.degree)
    if args.json:
        print(json.dumps([{"center_exponents": list(cm), "element": element_records(z)}
                          for cm, z in zip(mons, basis)]))
    else:
        for cm, z in zip(mons, basis):
            print(f"Z1^{cm.a}*Z2^{cm.b}*Z3^{cm.c}\t{z}")
    return EXIT_OK


def cmd_is_central(args) -> int:
    result = is_central(parse_element(args.expr).to_hecke())
    print(json.dumps({"central": result}) if args.json else str(result).lower())
    return EXIT_OK


def cmd_center_hilbert(args) -> int:
    coeffs = center_hilbert_coeffs(args.order)
    print(json.dumps(coeffs) if args.json else " ".join(map(str, coeffs)))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = ACCEPTANCE if args.acceptance_only else ACCEPTANCE + INVARIANTS
    ok = True
    for r in run_checks(checks):
        ok = ok and r.passed
        print(json.dumps(r.__dict__) if args.json else r.line(), flush=True)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _char_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char-kind", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--lambda", dest="lam", default="symbolic", help="Z[q] expression or 'symbolic'")
    p.add_argument("--mu", default=None, help="Z[q] expression or 'symbolic' (kind 3)")
    p.add_argument("--mu-target", choices=("Y1", "Y2"), default="Y1")
    p.add_argument("--order", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="paramodular", description="Paramodular Hecke algebra engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--basis", choices=("monomial", "coset"), default="monomial")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("convert", parents=[common], help="change of basis")
    p.add_argument("expr")
    p.add_argument("--to", choices=("monomial", "coset"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("tqk", parents=[common], help="T(q^k), the sum of all degree-k cosets")
    p.add_argument("k", type=int)
    p.add_argument("--basis", choices=("monomial", "coset"), default="coset")
    p.set_defaults(func=cmd_tqk)

    p = sub.add_parser("series", aliases=["char-series"], parents=[common],
                       help="generating series of a character with its certificate")
    _char_flags(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("index-table", parents=[common], help="values of the index character on T(q^k)")
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_index_table)

    p = sub.add_parser("center-basis", parents=[common], help="basis of the degree-k part of the center")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_center_basis)

    p = sub.add_parser("is-central", parents=[common], help="test whether an element is central")
    p.add_argument("expr")
    p.set_defaults(func=cmd_is_central)

    p = sub.add_parser("center-hilbert", parents=[common], help="coefficients of the center's Hilbert series")
    p.add_argument("--order", type=int, default=12)
    p.set_defaults(func=cmd_center_hilbert)

    p = sub.add_parser("verify", parents=[common], help="run the self-verification suite")
    p.add_argument("--acceptance-only", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for name in ("k", "kmax", "degree", "order"):
        if getattr(args, name, 0) < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (PolyParseError, InvalidTripleError, KindUnsupportedError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonDivisibleError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
