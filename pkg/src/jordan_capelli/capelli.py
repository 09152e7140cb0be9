"""Normalized interpolation polynomials P_{J,lambda} and Capelli eigenvalues.

c_mu(lambda) = P_{J,mu}(tau_J(lambda_bar)), where lambda_bar is the highest
weight of V_lambda read in a_Omega coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import MPoly, format_rational
from .errors import CapelliError
from .interpolation import factorial_schur_q, super_jack_shifted
from .jordan import JordanCase, _require_mf, composite_coordinates, in_omega, omega, omega_upto
from .partitions import Partition, hook_product_q, hook_product_theta

DIAGNOSTIC_CASES = ("III", "IV")


def _fmt_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


@lru_cache(maxsize=None)
def _normalized(case: JordanCase, lam: Partition, force: bool) -> MPoly:
    if not force:
        _require_mf(case)
    if not in_omega(case, lam):
        raise CapelliError("NOT_IN_OMEGA", f"{list(lam)} is not in Omega for case {case.label()}")
    d = sum(lam)
    if case.sigma_type == "Q":
        return factorial_schur_q(case.r, lam).poly * (Fraction(factorial(d)) / hook_product_q(lam))
    theta = case.theta_J
    sp = super_jack_shifted(case.r_plus, case.r_minus, theta, lam, check_admissible=not force).poly
    return sp * (Fraction(factorial(d)) / hook_product_theta(lam, theta))


def normalized_poly(case: JordanCase, lam: Partition, *, force: bool = False) -> MPoly:
    """P_{J,lambda}: SP_lambda or Q*_lambda rescaled so that its value at its own node is |lambda|!."""
    return _normalized(case, tuple(lam), force)


def eigenvalue(case: JordanCase, mu: Partition, lam: Partition, *, convention: str = "printed",
               force: bool = False) -> Fraction:
    p = normalized_poly(case, mu, force=force)
    return p(composite_coordinates(case, tuple(lam), convention))


@dataclass(frozen=True)
class PairCheck:
    mu: Partition
    lam: Partition
    value: Fraction
    expected: Fraction
    ok: bool

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "lambda": list(self.lam), "value": format_rational(self.value),
                "expected": format_rational(self.expected), "ok": self.ok}


@dataclass
class CapelliReport:
    case: JordanCase
    degrees: tuple[int, ...]
    convention: str
    diagnostic: bool
    checks: list[PairCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[PairCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "case": self.case.to_json(),
            "degrees": list(self.degrees),
            "convention": self.convention,
            "diagnostic": self.diagnostic,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failures": len(self.failures),
            "checks": [c.to_json() for c in self.checks],
        }


def verify_capelli_lemma(case: JordanCase, d: int, *, convention: str = "printed", force: bool = False,
                         cumulative: bool = False) -> CapelliReport:
    """c_mu(mu) = d! and c_mu(lambda) = 0 for mu in Omega_d, lambda in Omega_{<=d}, lambda != mu.

    With ``cumulative`` every mu of degree <= d is tested. Failures are recorded, never raised.
    """
    degrees = tuple(range(d + 1)) if cumulative else (d,)
    report = CapelliReport(case, degrees, convention,
                           diagnostic=case.tag in DIAGNOSTIC_CASES and convention == "printed")
    for k in degrees:
        lams = omega_upto(case, k, force=force)
        for mu in omega(case, k, force=force):
            for lam in lams:
                value = eigenvalue(case, mu, lam, convention=convention, force=force)
                expected = Fraction(factorial(k)) if lam == mu else Fraction(0)
                report.checks.append(PairCheck(mu, lam, value, expected, value == expected))
    return report


@dataclass
class EigenvalueTable:
    case: JordanCase
    max_degree: int
    partitions: list[Partition]
    entries: dict[tuple[Partition, Partition], Fraction]
    convention: str = "printed"

    def __post_init__(self):
        if self.case.tag in DIAGNOSTIC_CASES and self.convention == "printed":
            return
        for mu in self.partitions:
            for lam in self.partitions:
                v = self.entries[mu, lam]
                if lam == mu and v != factorial(sum(mu)):
                    raise AssertionError(f"c_{mu}({mu}) = {v}")
                if lam != mu and sum(lam) <= sum(mu) and v != 0:
                    raise AssertionError(f"c_{mu}({lam}) = {v}")

    def diagonal(self) -> list[Fraction]:
        return [self.entries[mu, mu] for mu in self.partitions]

    def to_json(self) -> dict:
        return {
            "case": self.case.to_json(),
            "max_degree": self.max_degree,
            "convention": self.convention,
            "partitions": [list(p) for p in self.partitions],
            "entries": [{"mu": list(mu), "lambda": list(lam), "value": format_rational(self.entries[mu, lam])}
                        for mu in self.partitions for lam in self.partitions],
        }

    def to_tsv(self) -> str:
        lines = ["mu\tlambda\tvalue"]
        for mu in self.partitions:
            for lam in self.partitions:
                lines.append(f"{_fmt_partition(mu)}\t{_fmt_partition(lam)}\t{format_rational(self.entries[mu, lam])}")
        return "\n".join(lines) + "\n"


def eigenvalue_table(case: JordanCase, d: int, *, convention: str = "printed", force: bool = False) -> EigenvalueTable:
    parts = omega_upto(case, d, force=force)
    entries = {(mu, lam): eigenvalue(case, mu, lam, convention=convention, force=force)
               for mu in parts for lam in parts}
    return EigenvalueTable(case, d, parts, entries, convention)
