"""Compare tau^*(h_3) for the F case with the reference expansion, coefficient by coefficient."""
from jordan_capelli.algebra import format_rational
from jordan_capelli.harishchandra import (
    TILDE_VARS,
    f_case_display_poly,
    f_case_display_y_weight,
    f_case_h,
    to_tilde,
)


def _name(exps):
    return "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(TILDE_VARS, exps) if e) or "1"


def main():
    ours, shown = to_tilde(f_case_h(3)), f_case_display_poly()
    monos = sorted(ours.monomials() | shown.monomials(), reverse=True)
    print(f"{'monomial':14s} {'computed':>10s} {'display':>10s}")
    for e in monos:
        a, b = ours.coefficient(e), shown.coefficient(e)
        print(f"{_name(e):14s} {format_rational(a):>10s} {format_rational(b):>10s}{'' if a == b else '  *'}")
    w = f_case_display_y_weight()
    print(f"identity holds: {ours == shown}")
    print(f"y-weight reproducing the display: {None if w is None else format_rational(w)} (ring uses 9/4)")


if __name__ == "__main__":
    main()
