"""Command-line front end.

    python3 -m jordan_capelli decompose --case V --degree 2
    python3 -m jordan_capelli eigenvalue --case VII --n 3 --mu 2,1 --lambda 3,1
    python3 -m jordan_capelli table --case I --m 1 --n 1 --degree 3 --format tsv
    python3 -m jordan_capelli verify --suite f-obstruction

Errors go to stdout as {"error": CODE, "detail": ...} with exit status 2.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import format_rational
from .capelli import eigenvalue, eigenvalue_table, normalized_poly
from .errors import CapelliError
from .harishchandra import (
    f_case_coordinate_identity,
    f_case_display_y_weight,
    f_case_obstruction,
    hc_surjectivity_check,
)
from .jordan import CONVENTIONS, JordanCase, highest_weight, make_case, omega
from .partitions import parse_partition
from .suites import SUITES, run_suites

DEFAULT_MAX_DEGREE = 6


def degree_cap() -> int:
    raw = os.environ.get("CAPELLI_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise CapelliError("BAD_PARAMETERS", f"CAPELLI_MAX_DEGREE={raw!r} is not an integer")


def _check_degree(d: int):
    if d < 0:
        raise CapelliError("BAD_PARAMETERS", "degree must be non-negative")
    cap = degree_cap()
    if d > cap:
        raise CapelliError("DEGREE_TOO_LARGE", f"degree {d} exceeds the cap {cap} (set CAPELLI_MAX_DEGREE)")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _case_from(args) -> JordanCase:
    if args.case is None:
        raise CapelliError("BAD_PARAMETERS", "--case is required")
    return make_case(args.case, args.m, args.n, args.t)


def _partition(text, flag):
    if text is None:
        raise CapelliError("BAD_PARAMETERS", f"{flag} is required")
    try:
        return parse_partition(text)
    except ValueError as exc:
        if isinstance(exc, CapelliError):
            raise
        raise CapelliError("NOT_A_PARTITION", f"cannot parse {text!r}")


def _weight_json(w) -> dict:
    return {b: format_rational(c) for b, c in zip(w.basis, w.coeffs) if c}


def cmd_decompose(args):
    case = _case_from(args)
    _check_degree(args.degree)
    out = [{"lambda": list(lam), "highest_weight": _weight_json(highest_weight(case, lam))}
           for lam in omega(case, args.degree, force=args.force)]
    if args.format == "text":
        return "\n".join(f"{list(lam['lambda'])} -> {highest_weight(case, tuple(lam['lambda']))}" for lam in out)
    if args.format == "tsv":
        return "\n".join(["lambda\thighest_weight"] + [
            f"{','.join(map(str, e['lambda']))}\t{json.dumps(e['highest_weight'], sort_keys=True)}" for e in out])
    return out


def cmd_eigenvalue(args):
    case = _case_from(args)
    mu, lam = _partition(args.mu, "--mu"), _partition(args.lam, "--lambda")
    _check_degree(max(sum(mu), sum(lam)))
    value = eigenvalue(case, mu, lam, convention=args.convention, force=args.force)
    if args.format == "text":
        return format_rational(value)
    return {"value": format_rational(value)}


def cmd_poly(args):
    case = _case_from(args)
    lam = _partition(args.lam, "--lambda")
    _check_degree(sum(lam))
    p = normalized_poly(case, lam, force=args.force)
    if args.format == "text":
        return repr(p)
    return {"lambda": list(lam), "case": case.to_json(), "poly": p.to_json()}


def cmd_table(args):
    case = _case_from(args)
    _check_degree(args.degree)
    table = eigenvalue_table(case, args.degree, convention=args.convention, force=args.force)
    if args.format == "tsv":
        return table.to_tsv().rstrip("\n")
    if args.format == "text":
        return "\n".join(f"c_{list(mu)}({list(lam)}) = {format_rational(v)}" for (mu, lam), v in table.entries.items())
    return table.to_json()


def cmd_hc(args):
    check = args.check
    if check == "obstruction":
        return {"ok": f_case_obstruction(), "rank": None, "details": {"target": "h_3", "degree": 3}}
    if check == "identity":
        w = f_case_display_y_weight()
        return {"ok": f_case_coordinate_identity(), "rank": None,
                "details": {"display_y_weight": None if w is None else format_rational(w), "ring_y_weight": "9/4"}}
    case = _case_from(args)
    _check_degree(args.degree)
    rep = hc_surjectivity_check(case, args.degree, convention=args.convention)
    return {"ok": rep.ok, "rank": rep.rank,
            "details": {"target_rank": rep.target_rank, "failures": [list(mu) for mu in rep.failures]}}


def cmd_verify(args):
    names = []
    for s in args.suite or ["all"]:
        names += [x for x in s.split(",") if x]
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise CapelliError("UNKNOWN_SUITE", f"{unknown}; choose from {sorted(SUITES)}")
    _check_degree(args.max_degree)
    ok, results = run_suites(names, args.max_degree, args.seed)
    if args.format == "json":
        payload = {"ok": ok, "suites": {n: [c.to_json() for c in cs] for n, cs in results.items()}}
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        lines = []
        for name, checks in results.items():
            for c in checks:
                tag = "PASS" if c.ok else ("DIAG" if c.diagnostic else "FAIL")
                lines.append(f"{tag}\t{name}\t{c.name}")
        asserted = [c for cs in results.values() for c in cs if not c.diagnostic]
        lines.append(f"{'OK' if ok else 'FAILED'}: {sum(c.ok for c in asserted)}/{len(asserted)} asserted checks pass")
        text = "\n".join(lines)
    return _Exit(text, 0 if ok else 1)


class _Exit:
    def __init__(self, text: str, code: int):
        self.text, self.code = text, code


class _Parser(argparse.ArgumentParser):
    """Usage errors become structured errors too."""

    def error(self, message):
        raise CapelliError("BAD_ARGUMENTS", message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jordan-capelli", description="Capelli eigenvalues for Jordan superalgebras")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt=("json", "tsv", "text")):
        sp.add_argument("--case", help="I, II, III, IV, V, VI or VII")
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--t", type=_rational)
        sp.add_argument("--format", choices=fmt, default="json")
        sp.add_argument("--force", action="store_true", help="skip the multiplicity-free gate")
        sp.add_argument("--convention", choices=CONVENTIONS, default="printed")

    sp = sub.add_parser("decompose", help="Omega_d with highest weights")
    common(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("eigenvalue", help="c_mu(lambda)")
    common(sp)
    sp.add_argument("--mu")
    sp.add_argument("--lambda", dest="lam")
    sp.set_defaults(func=cmd_eigenvalue)

    sp = sub.add_parser("poly", help="normalized polynomial P_{J,lambda}")
    common(sp)
    sp.add_argument("--lambda", dest="lam")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("table", help="eigenvalue table over Omega_{<=d}")
    common(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("hc", help="Harish-Chandra image checks")
    common(sp)
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--check", choices=["surjectivity", "obstruction", "identity"], default="surjectivity")
    sp.set_defaults(func=cmd_hc)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", action="append", help=f"comma-separated; 'all' or any of {', '.join(SUITES)}")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["json", "text"], default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except CapelliError as exc:
        print(json.dumps(exc.to_json(), sort_keys=True))
        return 2
    if isinstance(result, _Exit):
        print(result.text)
        return result.code
    print(result if isinstance(result, str) else json.dumps(result, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
