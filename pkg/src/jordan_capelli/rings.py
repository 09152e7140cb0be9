"""The deformed ring of supersymmetric-type polynomials and the Q-type ring Gamma_n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import MPoly, Q, bernoulli_poly, coefficient_matrix, format_rational, rank
from .errors import CapelliError
from .partitions import all_partitions

SUPER_A = "SUPER_A"
Q_TYPE = "Q_TYPE"

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RingSpec:
    kind: str
    m: int = 0
    n: int = 0
    theta: Fraction | None = None

    def __post_init__(self):
        if self.kind == SUPER_A:
            if self.m < 0 or self.n < 0:
                raise CapelliError("BAD_RING", "m, n must be non-negative")
            theta = Q(self.theta if self.theta is not None else 1)
            if self.n > 0 and theta == 0:
                raise CapelliError("THETA_ZERO", "theta must be nonzero when n > 0")
            object.__setattr__(self, "theta", theta)
        elif self.kind == Q_TYPE:
            if self.n < 1:
                raise CapelliError("BAD_RING", "Q_TYPE needs n >= 1")
            object.__setattr__(self, "m", 0)
            object.__setattr__(self, "theta", None)
        else:
            raise CapelliError("BAD_RING", f"unknown ring kind {self.kind!r}")

    @classmethod
    def super_a(cls, m: int, n: int, theta) -> "RingSpec":
        return cls(SUPER_A, m, n, Q(theta))

    @classmethod
    def q_type(cls, n: int) -> "RingSpec":
        return cls(Q_TYPE, 0, n)

    @property
    def vars(self) -> tuple[str, ...]:
        if self.kind == Q_TYPE:
            return tuple(f"x{i}" for i in range(1, self.n + 1))
        return tuple(f"x{i}" for i in range(1, self.m + 1)) + tuple(f"y{j}" for j in range(1, self.n + 1))

    def to_json(self) -> dict:
        out = {"kind": self.kind, "m": self.m, "n": self.n}
        if self.kind == SUPER_A:
            out["theta"] = format_rational(self.theta)
        return out


def _is_symmetric_block(p: MPoly, start: int, size: int) -> bool:
    ident = list(range(len(p.vars)))
    for k in range(start, start + size - 1):
        perm = ident[:]
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        if p.permute(perm) != p:
            return False
    return True


def is_member(spec: RingSpec, p: MPoly) -> bool:
    if p.vars != spec.vars:
        raise CapelliError("VARIABLE_MISMATCH", f"{p.vars} vs {spec.vars}")
    if spec.kind == Q_TYPE:
        if not _is_symmetric_block(p, 0, spec.n):
            return False
        if spec.n == 1:
            return True
        x1, x2 = spec.vars[0], spec.vars[1]
        return not p.subs({x2: -MPoly.var(spec.vars, x1)}).involves(x1)

    m, n = spec.m, spec.n
    if not (_is_symmetric_block(p, 0, m) and _is_symmetric_block(p, m, n)):
        return False
    gens = MPoly.gens(spec.vars)
    for i in range(m):
        for j in range(n):
            plus = [Fraction(0)] * (m + n)
            plus[i], plus[m + j] = HALF, -HALF
            minus = [-c for c in plus]
            diff = p.shift(plus) - p.shift(minus)
            # exact divisibility by x_i + theta*y_j <=> vanishing after x_i := -theta*y_j
            if not diff.subs({spec.vars[i]: gens[m + j] * (-spec.theta)}).is_zero():
                return False
    return True


@lru_cache(maxsize=None)
def deformed_power_sum(spec: RingSpec, t: int) -> MPoly:
    """h_t = sum_i B_t(x_i + 1/2) + (-theta)^(t-1) sum_j B_t(y_j + 1/2)."""
    if spec.kind != SUPER_A:
        raise CapelliError("BAD_RING", "deformed power sums live in SUPER_A rings")
    if t < 1:
        raise ValueError("t >= 1")
    bt = bernoulli_poly(t)
    gens = MPoly.gens(spec.vars)
    total = MPoly.zero(spec.vars)
    weight = (-spec.theta) ** (t - 1)
    for k, g in enumerate(gens):
        term = bt.substitute([g + HALF])
        total = total + (term if k < spec.m else term * weight)
    return total


def odd_power_sum(spec: RingSpec, r: int) -> MPoly:
    if r % 2 == 0:
        raise CapelliError("EVEN_DEGREE", f"r={r} is even")
    if r < 1:
        raise ValueError("r >= 1")
    total = MPoly.zero(spec.vars)
    for g in MPoly.gens(spec.vars):
        total = total + g**r
    return total


def _index_partitions(d: int, odd_only: bool):
    for k in range(d + 1):
        for lam in sorted(all_partitions(k)):
            if not odd_only or all(p % 2 for p in lam):
                yield lam


@lru_cache(maxsize=None)
def spanning_set(spec: RingSpec, d: int) -> tuple[MPoly, ...]:
    """Products of ring generators of weighted degree <= d.

    The multi-index (m_1, m_2, ...) is carried as the partition with m_j parts equal
    to j (odd parts only for Q_TYPE); order is by weight, then ascending lex.
    """
    if d < 0:
        raise ValueError("d >= 0")
    one = MPoly.constant(spec.vars, 1)
    if spec.kind == Q_TYPE and spec.n == 1:
        x = MPoly.var(spec.vars, spec.vars[0])
        return tuple(x**k for k in range(d + 1))
    if spec.kind == Q_TYPE:
        gen = lambda r: odd_power_sum(spec, r)
    else:
        gen = lambda t: deformed_power_sum(spec, t)
    out = []
    for lam in _index_partitions(d, odd_only=spec.kind == Q_TYPE):
        p = one
        for r in lam:
            p = p * gen(r)
        out.append(p)
    return tuple(out)


def filtered_dimension(spec: RingSpec, d: int) -> int:
    rows, _ = coefficient_matrix(spanning_set(spec, d))
    return rank(rows)
