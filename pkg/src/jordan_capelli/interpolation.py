"""Shifted super Jack and factorial Schur Q polynomials by exact interpolation.

Both families are pinned down by degree, ring membership, vanishing at the
nodes of all smaller-or-equal partitions and a normalization at their own
node. ``super_jack_shifted`` and ``factorial_schur_q`` solve over the
generator spanning sets of :mod:`rings`; the ``*_bruteforce`` variants solve
over raw monomials with membership written as linear equations, and serve as
an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .algebra import MPoly, LinearSystem, Q, linear_combination, rank, solve_exact
from .errors import CapelliError
from .jordan import admissibility_set_contains
from .partitions import (
    Partition,
    enumerate_hook,
    enumerate_strict,
    frobenius_coords,
    hook_product_q,
    hook_product_theta,
    in_hook,
    is_strict,
    transpose,
)
from .rings import HALF, RingSpec, is_member, spanning_set


@dataclass(frozen=True)
class InterpolationResult:
    poly: MPoly
    spec: RingSpec
    lam: Partition
    verified: bool

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "spec": self.spec.to_json(),
                "poly": self.poly.to_json(), "verified": self.verified}


def hook_nodes(m: int, n: int, theta, d: int) -> list[tuple[Partition, tuple[Fraction, ...]]]:
    return [(mu, frobenius_coords(mu, m, n, theta).point())
            for k in range(d + 1) for mu in enumerate_hook(m, n, k)]


def strict_nodes(n: int, d: int) -> list[tuple[Partition, tuple[Fraction, ...]]]:
    return [(mu, tuple(Fraction(mu[i]) if i < len(mu) else Fraction(0) for i in range(n)))
            for k in range(d + 1) for mu in enumerate_strict(n, k)]


def _solve_on_span(span, nodes, lam, normalizer, vars, reverse_rows):
    rows = [[g(point) for g in span] for _, point in nodes]
    rhs = [normalizer if mu == lam else Fraction(0) for mu, _ in nodes]
    if reverse_rows:
        rows, rhs = rows[::-1], rhs[::-1]
    try:
        coeffs = solve_exact(LinearSystem(rows, rhs), ncols=len(span))
    except CapelliError as exc:
        raise CapelliError("NO_SOLUTION", f"interpolation for {list(lam)} is inconsistent") from exc
    return linear_combination(span, coeffs, vars)


def _verify(spec, poly, nodes, lam, normalizer) -> bool:
    if poly.degree() > sum(lam):
        return False
    for mu, point in nodes:
        if poly(point) != (normalizer if mu == lam else 0):
            return False
    return is_member(spec, poly)


def _check_theta(m: int, n: int, theta):
    if admissibility_set_contains(m, n, theta):
        raise CapelliError("INADMISSIBLE_THETA", f"theta={theta} lies in the excluded set S({m},{n})")


@lru_cache(maxsize=None)
def _super_jack(m, n, theta, lam, reverse_rows, check_admissible):
    if check_admissible:
        _check_theta(m, n, theta)
    if not in_hook(lam, m, n):
        raise CapelliError("NOT_IN_HOOK", f"{list(lam)} is not an ({m},{n})-hook partition")
    spec = RingSpec.super_a(m, n, theta)
    d = sum(lam)
    normalizer = hook_product_theta(lam, theta)
    nodes = hook_nodes(m, n, theta, d)
    poly = _solve_on_span(spanning_set(spec, d), nodes, lam, normalizer, spec.vars, reverse_rows)
    return InterpolationResult(poly, spec, lam, _verify(spec, poly, nodes, lam, normalizer))


def super_jack_shifted(m: int, n: int, theta, lam: Partition, *, reverse_rows: bool = False,
                       check_admissible: bool = True) -> InterpolationResult:
    """SP_lambda(x, y, theta) in m + n variables."""
    return _super_jack(m, n, Q(theta), tuple(lam), reverse_rows, check_admissible)


@lru_cache(maxsize=None)
def _schur_q(n, lam, reverse_rows):
    if not is_strict(lam):
        raise CapelliError("NOT_STRICT", f"{list(lam)} has repeated parts")
    if len(lam) > n:
        raise CapelliError("LENGTH_EXCEEDED", f"{list(lam)} has more than {n} parts")
    spec = RingSpec.q_type(n)
    d = sum(lam)
    normalizer = hook_product_q(lam)
    nodes = strict_nodes(n, d)
    poly = _solve_on_span(spanning_set(spec, d), nodes, lam, normalizer, spec.vars, reverse_rows)
    return InterpolationResult(poly, spec, lam, _verify(spec, poly, nodes, lam, normalizer))


def factorial_schur_q(n: int, lam: Partition, *, reverse_rows: bool = False) -> InterpolationResult:
    """Q*_lambda(x_1..x_n)."""
    return _schur_q(n, tuple(lam), reverse_rows)


# ---------------------------------------------------------------------------
# brute-force oracle over raw monomials


def _monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(d + 1):
        for combo in combinations_with_replacement(range(nvars), k):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _symmetry_rows(monos, blocks):
    index = {e: k for k, e in enumerate(monos)}
    rows = []
    for start, size in blocks:
        for a in range(start, start + size - 1):
            for e in monos:
                s = list(e)
                s[a], s[a + 1] = s[a + 1], s[a]
                s = tuple(s)
                if s > e:
                    row = [Fraction(0)] * len(monos)
                    row[index[e]] += 1
                    row[index[s]] -= 1
                    rows.append(row)
    return rows


def _linear_image_rows(vars, monos, image):
    """Rows expressing 'image(sum c_e x^e) == 0' coefficientwise, for a linear map ``image``."""
    images = [image(MPoly(vars, {e: 1})) for e in monos]
    targets = sorted(set().union(*(p.monomials() for p in images)))
    return [[p.coefficient(t) for p in images] for t in targets]


def _bruteforce(vars, monos, constraint_rows, nodes, lam, normalizer):
    interp = [[MPoly(vars, {e: 1})(point) for e in monos] for _, point in nodes]
    rhs = [normalizer if mu == lam else Fraction(0) for mu, _ in nodes]
    matrix = constraint_rows + interp
    full_rhs = [Fraction(0)] * len(constraint_rows) + rhs
    coeffs = solve_exact(LinearSystem(matrix, full_rhs), ncols=len(monos))
    unique = rank(matrix) == len(monos)
    return MPoly(vars, dict(zip(monos, coeffs))), unique


def super_jack_bruteforce(m: int, n: int, theta, lam: Partition) -> tuple[MPoly, bool]:
    """(SP_lambda, solution_is_unique) from the raw monomial basis of degree <= |lambda|."""
    theta = Q(theta)
    spec = RingSpec.super_a(m, n, theta)
    vars = spec.vars
    d = sum(lam)
    monos = _monomials(m + n, d)
    rows = _symmetry_rows(monos, [(0, m), (m, n)])
    gens = MPoly.gens(vars)
    for i in range(m):
        for j in range(n):
            plus = [Fraction(0)] * (m + n)
            plus[i], plus[m + j] = HALF, -HALF
            minus = [-c for c in plus]

            def image(f, i=i, j=j, plus=plus, minus=minus):
                return (f.shift(plus) - f.shift(minus)).subs({vars[i]: gens[m + j] * (-theta)})

            rows += _linear_image_rows(vars, monos, image)
    return _bruteforce(vars, monos, rows, hook_nodes(m, n, theta, d), tuple(lam), hook_product_theta(lam, theta))


def factorial_schur_q_bruteforce(n: int, lam: Partition) -> tuple[MPoly, bool]:
    spec = RingSpec.q_type(n)
    vars = spec.vars
    d = sum(lam)
    monos = _monomials(n, d)
    rows = _symmetry_rows(monos, [(0, n)])
    if n >= 2:
        x1 = MPoly.var(vars, vars[0])

        def image(f):
            g = f.subs({vars[1]: -x1})
            return MPoly(vars, {e: c for e, c in g.terms.items() if e[0]})

        rows += _linear_image_rows(vars, monos, image)
    return _bruteforce(vars, monos, rows, strict_nodes(n, d), tuple(lam), hook_product_q(lam))


# ---------------------------------------------------------------------------


def knop_sahi_duality_check(k: int, theta, lam: Partition) -> bool:
    """SP_lambda(y, theta) in the (0, k) ring against the rescaled SP_lambda'(x, 1/theta) in (k, 0)."""
    theta = Q(theta)
    lam = tuple(lam)
    if not in_hook(lam, 0, k):
        raise CapelliError("NOT_IN_HOOK", f"{list(lam)} needs lambda_1 <= {k}")
    if admissibility_set_contains(k, 0, 1 / theta):
        raise CapelliError("INADMISSIBLE_THETA", f"1/theta={1 / theta} lies in S({k},0)")
    lhs = super_jack_shifted(0, k, theta, lam).poly
    conj = transpose(lam)
    rhs = super_jack_shifted(k, 0, 1 / theta, conj).poly.rename(lhs.vars)
    scale = hook_product_theta(lam, theta) / hook_product_theta(conj, 1 / theta)
    return lhs == rhs * scale
