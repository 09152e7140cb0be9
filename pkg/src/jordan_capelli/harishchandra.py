"""Polynomial shadow of the Harish-Chandra image.

Generator families live on a_Omega coordinates. ``hc_surjectivity_check``
tests whether tau_J^*(P_{J,mu}) lies in the span of generator products of
bounded degree; the F-case (Case V) functions test the obstruction and the
symmetry characterization of tau_J^*(Lambda_J).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .algebra import (
    AffineMap,
    LinearSystem,
    MPoly,
    bernoulli_poly,
    coefficient_matrix,
    poly_compose_affine,
    rank,
    solve_exact,
)
from .capelli import normalized_poly
from .errors import CapelliError
from .jordan import JordanCase, _require_mf, make_case, omega_upto, tau
from .rings import HALF, deformed_power_sum, is_member, odd_power_sum

TILDE_VARS = ("at", "bt", "ct")


@dataclass
class HCGeneratorSet:
    case: JordanCase
    generators: list[MPoly] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)

    def add(self, label: str, p: MPoly):
        self.labels.append(label)
        self.generators.append(p)

    def family(self, prefix: str) -> list[MPoly]:
        return [g for lab, g in zip(self.labels, self.generators) if lab.split("[")[0] == prefix]

    def __len__(self):
        return len(self.generators)


def _gens(case: JordanCase):
    return MPoly.gens(case.aomega_vars)


def _case_i(case, max_k, out):
    m, n = case.m, case.n
    g = _gens(case)
    a, b = g[:m], g[m:]
    for k in range(1, max_k + 1):
        f = MPoly.zero(case.aomega_vars)
        for i in range(1, m + 1):
            f = f + (a[i - 1] + (Fraction(m + 1, 2) - Fraction(n, 2) - i)) ** k
        for j in range(1, n + 1):
            f = f + (b[j - 1] + (Fraction(m + 1, 2) + Fraction(n, 2) - j)) ** k * (-1) ** (k - 1)
        out.add(f"f[{k}]", f)


def _case_ii(case, max_k, out):
    m, n = case.m, case.n
    g = _gens(case)
    a, b = g[:m], g[m:]
    base = Fraction(m + 1, 2)
    for k in range(1, max_k + 1):
        f = MPoly.zero(case.aomega_vars)
        for i in range(1, m + 1):
            f = f + (a[i - 1] - base + n + i) ** k
        for j in range(1, n + 1):
            pair = (b[j - 1] - base - n + 2 * j - 1) ** k + (b[j - 1] - base - n + 2 * j) ** k
            f = f + pair * (-1) ** (k - 1)
        out.add(f"f[{k}]", f)


def _case_iii(case, max_k, out):
    a, b = _gens(case)
    out.add("f[1]", b)
    if max_k >= 2:
        out.add("f[2]", (a + (Fraction(case.m + 1, 2) - case.n - 1)) ** 2)


def _case_iv(case, max_k, out, printed):
    a, b = _gens(case)
    for k in range(1, max_k + 1):
        head = (a + 1) if printed else (a + 1) ** k
        out.add(f"f[{k}]", head + ((b - 1) ** k + b ** k) * (-1) ** (k - 1))


def _case_vi(case, max_k, out):
    g = _gens(case)
    for r in range(1, max_k + 1, 2):
        out.add(f"p[{r}]", sum((x ** r for x in g[1:]), g[0] ** r))


def _g_monomials(max_deg: int):
    # s^alpha (t1 t2)^beta (t1 + t2)^gamma, graded by alpha + 2 beta + gamma
    for deg in range(max_deg + 1):
        for beta in range(deg // 2 + 1):
            for gamma in range(deg - 2 * beta + 1):
                yield deg - 2 * beta - gamma, beta, gamma


def _case_v(case, max_k, max_g_degree, out):
    a, b, c = _gens(case)
    s, t1, t2 = a + 2, (b + 2) ** 2, (b + 1) ** 2
    for k in range(1, max_k + 1):
        out.add(f"f[{k}]", s ** (2 * k) - (b + 2) ** (2 * k) - (b + 1) ** (2 * k))
    prefactor = s * (t1 - s ** 2) * (t2 - s ** 2)
    for alpha, beta, gamma in _g_monomials(max_g_degree):
        out.add(f"F[{alpha},{beta},{gamma}]", prefactor * s ** alpha * (t1 * t2) ** beta * (t1 + t2) ** gamma)
    out.add("Q", c)


def hc_generators(case: JordanCase, max_k: int, max_g_degree: int = 2, *, printed_iv: bool = False) -> HCGeneratorSet:
    if max_k < 1:
        raise ValueError("max_k >= 1")
    out = HCGeneratorSet(case)
    tag = case.tag
    if tag == "I":
        _case_i(case, max_k, out)
    elif tag == "II":
        _case_ii(case, max_k, out)
    elif tag == "III":
        _case_iii(case, max_k, out)
    elif tag == "IV":
        _case_iv(case, max_k, out, printed_iv)
    elif tag == "V":
        _case_v(case, max_k, max_g_degree, out)
    elif tag == "VI":
        _case_vi(case, max_k, out)
    else:
        raise CapelliError("UNSUPPORTED_CASE", "no explicit generator family for case VII")
    return out


def pullback_to_ring(case: JordanCase, f: MPoly, convention: str = "printed") -> MPoly:
    """(tau_J^*)^{-1} f = f o tau_J^{-1}, a polynomial on the ring's variables."""
    return poly_compose_affine(f, tau(case, convention).inverse(case.ring.vars))


def tau_pullback(case: JordanCase, p: MPoly, convention: str = "printed") -> MPoly:
    """tau_J^* p = p o tau_J, a polynomial on a_Omega coordinates."""
    return poly_compose_affine(p, tau(case, convention))


def generator_membership(case: JordanCase, max_k: int, *, convention: str = "printed", printed_iv: bool = False,
                         max_g_degree: int = 1) -> dict[str, bool]:
    """Which generators land in the ring after pulling back through tau_J^{-1}."""
    gens = hc_generators(case, max_k, max_g_degree, printed_iv=printed_iv)
    return {lab: is_member(case.ring, pullback_to_ring(case, g, convention))
            for lab, g in zip(gens.labels, gens.generators)}


def product_span(generators: list[MPoly], vars, d: int) -> list[MPoly]:
    """All products of generators (with repetition) of total degree <= d, including 1."""
    gens = [(g, g.degree()) for g in generators if 0 < g.degree() <= d]
    out = [MPoly.constant(vars, 1)]

    def extend(start, prod, deg):
        for idx in range(start, len(gens)):
            g, gd = gens[idx]
            if deg + gd <= d:
                p = prod * g
                out.append(p)
                extend(idx, p, deg + gd)

    extend(0, MPoly.constant(vars, 1), 0)
    return out


class SurjectivityReport(NamedTuple):
    ok: bool
    rank: int
    target_rank: int
    failures: tuple

    def to_json(self) -> dict:
        return {"ok": self.ok, "rank": self.rank, "target_rank": self.target_rank,
                "failures": [list(mu) for mu in self.failures]}


def _members(span: list[MPoly], targets: list[MPoly]) -> tuple[int, list[bool]]:
    rows, _ = coefficient_matrix(span + targets)
    base = rank(rows[: len(span)])
    return base, [rank(rows[: len(span)] + [row]) == base for row in rows[len(span):]]


def _surjectivity_span(case: JordanCase, d: int) -> list[MPoly]:
    if case.tag == "VII":
        ring = case.ring
        odd = [tau_pullback(case, odd_power_sum(ring, r)) for r in range(1, d + 1, 2)]
        return product_span(odd, case.aomega_vars, d)
    return product_span(hc_generators(case, max(d, 1)).generators, case.aomega_vars, d)


def hc_surjectivity_check(case: JordanCase, d: int, *, convention: str = "printed") -> SurjectivityReport:
    if case.tag == "V":
        raise CapelliError("UNSUPPORTED_CASE", "the F case is handled by f_case_obstruction")
    _require_mf(case)
    span = _surjectivity_span(case, d)
    parts = omega_upto(case, d)
    targets = [tau_pullback(case, normalized_poly(case, mu), convention) for mu in parts]
    base, inside = _members(span, targets)
    failures = tuple(mu for mu, ok in zip(parts, inside) if not ok)
    return SurjectivityReport(not failures, base, len(parts), failures)


# ---------------------------------------------------------------------------
# F case


def f_case() -> JordanCase:
    return make_case("V")


def f_case_h(t: int) -> MPoly:
    """tau_J^*(h_t) for Lambda_{2,1,3/2}, on (a, b, c)."""
    case = f_case()
    return tau_pullback(case, deformed_power_sum(case.ring, t))


def f_case_obstruction() -> bool:
    """True iff tau_J^*(h_3) is outside the degree <= 3 span of the F-case generator products."""
    case = f_case()
    span = product_span(hc_generators(case, 2).generators, case.aomega_vars, 3)
    _, (inside,) = _members(span, [f_case_h(3)])
    return not inside


_TO_ABC = AffineMap(
    ((HALF, HALF, 0), (HALF, -HALF, 0), (0, 0, 1)),
    (-2, Fraction(-3, 2), 0),
    TILDE_VARS,
)


def to_tilde(p: MPoly) -> MPoly:
    """Rewrite p(a, b, c) in the coordinates at = a+b+7/2, bt = a-b+1/2, ct = c."""
    return poly_compose_affine(p, _TO_ABC)


def f_case_display_poly() -> MPoly:
    """The displayed expansion of tau_J^*(h_3) in (at, bt, ct)."""
    at, bt, ct = MPoly.gens(TILDE_VARS)
    F = Fraction
    return (
        ct ** 3 * F(81, 64)
        - (at + bt) * ct ** 2 * F(135, 128)
        + ((at ** 2 + bt ** 2) * F(171, 256) + at * bt * F(27, 128) - F(51, 64)) * ct
        - (at ** 3 + bt ** 3) * F(53, 512)
        - (at ** 2 * bt + at * bt ** 2) * F(63, 512)
        + (at + bt) * F(35, 128)
    )


def f_case_coordinate_identity() -> bool:
    return to_tilde(f_case_h(3)) == f_case_display_poly()


def f_case_display_y_weight():
    """The w with  tau^*(sum B_3(x_i+1/2) + w B_3(y_1+1/2)) == display, or None if no w fits.

    Ring membership needs w = (-theta)^2 = 9/4.
    """
    case = f_case()
    ring = case.ring
    z = MPoly.gens(ring.vars)
    b3 = bernoulli_poly(3)
    xs = b3.substitute([z[0] + HALF]) + b3.substitute([z[1] + HALF])
    ys = b3.substitute([z[2] + HALF])
    px, py = to_tilde(tau_pullback(case, xs)), to_tilde(tau_pullback(case, ys))
    target = f_case_display_poly() - px
    rows, monos = coefficient_matrix([py, target])
    try:
        (w,) = solve_exact(LinearSystem([[r] for r in rows[0]], rows[1]), ncols=1)
    except CapelliError:
        return None
    return w


def f_case_membership(p: MPoly) -> bool:
    """Symmetry characterization of tau_J^*(Lambda_J) on (a, b, c)."""
    vars = ("a", "b", "c")
    if p.vars != vars:
        raise CapelliError("VARIABLE_MISMATCH", f"expected variables {vars}")
    a, b, c = MPoly.gens(vars)
    if p.subs({"b": -b - 3}) != p:
        return False
    diff = p.substitute([a + 1, b + HALF, c]) - p.substitute([a - 1, b - HALF, c])
    return diff.subs({"a": b - HALF}).is_zero()


def case6_shifted_family(n: int, max_k: int) -> list[MPoly]:
    """sum (a_i + 1/2)^k + (-1)^(k-1) sum (a_i - 1/2)^k on the Case VI a_Omega coordinates."""
    case = make_case("VI", n=n)
    g = _gens(case)
    out = []
    for k in range(1, max_k + 1):
        f = MPoly.zero(case.aomega_vars)
        for x in g:
            f = f + (x + HALF) ** k + (x - HALF) ** k * (-1) ** (k - 1)
        out.append(f)
    return out
