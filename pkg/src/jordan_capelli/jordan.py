"""Registry of the seven Jordan superalgebra cases.

Each case fixes a restricted root system (type A with deformation parameter
theta_J, or type Q), the index set Omega of partitions, the highest weights of
the summands of P(V), and the affine map tau_J from highest-weight
coordinates to the evaluation space of the interpolation polynomials.

Weight bases:
    I, VII  doubled basis, first copy then second copy ("eps1_1", ..., "eps1_2", ...)
    II      eps1..epsm, delta1..delta2n
    III     eps1, zeta
    IV      eps1, delta1, delta2
    V       eps1, delta1, delta2, zeta
    VI      eps1..epsn, delta1..deltan
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Sequence

from .algebra import AffineMap, Q, format_rational
from .errors import CapelliError
from .partitions import Partition, enumerate_hook, enumerate_strict, in_hook, is_strict, part, transpose
from .rings import RingSpec

CASES = ("I", "II", "III", "IV", "V", "VI", "VII")
TYPE_A_CASES = ("I", "II", "III", "IV", "V")
CONVENTIONS = ("printed", "frobenius")


def admissibility_set_contains(m: int, n: int, theta) -> bool:
    """Is theta in the excluded parameter set S(m, n)?"""
    if m < 0 or n < 0:
        raise ValueError("m, n >= 0")
    theta = Q(theta)
    if n == 0:
        # -a/b with a >= 1 and 1 <= b <= m-1: negative with reduced denominator <= m-1
        return theta < 0 and theta.denominator <= m - 1
    if m == 0:
        # -a/b with 0 <= a <= n, b >= 1: smallest representative has a = |numerator|
        return theta <= 0 and -theta.numerator <= n
    return theta <= 0


@dataclass(frozen=True)
class JordanCase:
    tag: str
    m: int | None = None
    n: int | None = None
    t: Fraction | None = None

    def __post_init__(self):
        tag = self.tag
        if tag not in CASES:
            raise CapelliError("UNKNOWN_CASE", f"case must be one of {', '.join(CASES)}")
        need_mn = tag in ("I", "II", "III")
        if need_mn:
            if self.m is None or self.n is None or self.m < 1 or self.n < 1:
                raise CapelliError("BAD_PARAMETERS", f"case {tag} needs m, n >= 1")
        elif tag in ("VI", "VII"):
            if self.n is None or self.n < 2:
                raise CapelliError("BAD_PARAMETERS", f"case {tag} needs n >= 2")
            if self.m is not None:
                raise CapelliError("BAD_PARAMETERS", f"case {tag} takes no m")
        elif self.m is not None or self.n is not None:
            raise CapelliError("BAD_PARAMETERS", f"case {tag} takes no m or n")
        if tag == "IV":
            if self.t is None:
                raise CapelliError("BAD_PARAMETERS", "case IV needs t")
            t = Q(self.t)
            if t in (0, -1):
                raise CapelliError("BAD_PARAMETERS", "case IV needs t not in {0, -1}")
            object.__setattr__(self, "t", t)
        elif self.t is not None:
            raise CapelliError("BAD_PARAMETERS", f"case {tag} takes no t")

    # derived constants
    @property
    def sigma_type(self) -> str:
        return "A" if self.tag in TYPE_A_CASES else "Q"

    @property
    def r_plus(self) -> int:
        return {"I": self.m, "II": self.m, "III": 2, "IV": 1, "V": 2}.get(self.tag, 0)

    @property
    def r_minus(self) -> int:
        return {"I": self.n, "II": self.n, "III": 0, "IV": 1, "V": 1}.get(self.tag, 0)

    @property
    def r(self) -> int:
        return self.n if self.sigma_type == "Q" else self.r_plus + self.r_minus

    @property
    def n_J(self) -> int:
        return self.r

    @property
    def theta_J(self) -> Fraction | None:
        return {
            "I": Fraction(1),
            "II": Fraction(1, 2),
            "III": Fraction(self.m - 1, 2) - self.n if self.tag == "III" else None,
            "IV": -1 / self.t if self.tag == "IV" else None,
            "V": Fraction(3, 2),
        }.get(self.tag)

    @property
    def ring(self) -> RingSpec:
        if self.sigma_type == "Q":
            return RingSpec.q_type(self.n)
        return RingSpec.super_a(self.r_plus, self.r_minus, self.theta_J)

    @property
    def weight_basis(self) -> tuple[str, ...]:
        tag, m, n = self.tag, self.m, self.n
        eps = lambda k: [f"eps{i}" for i in range(1, k + 1)]
        delta = lambda k: [f"delta{j}" for j in range(1, k + 1)]
        if tag == "I":
            one = eps(m) + delta(n)
            return tuple(f"{s}_1" for s in one) + tuple(f"{s}_2" for s in one)
        if tag == "II":
            return tuple(eps(m) + delta(2 * n))
        if tag == "III":
            return ("eps1", "zeta")
        if tag == "IV":
            return ("eps1", "delta1", "delta2")
        if tag == "V":
            return ("eps1", "delta1", "delta2", "zeta")
        if tag == "VI":
            return tuple(eps(n) + delta(n))
        return tuple(f"{s}_1" for s in eps(n)) + tuple(f"{s}_2" for s in eps(n))

    @property
    def aomega_vars(self) -> tuple[str, ...]:
        tag = self.tag
        if tag in ("I", "II"):
            return tuple(f"a{i}" for i in range(1, self.m + 1)) + tuple(f"b{j}" for j in range(1, self.n + 1))
        if tag in ("III", "IV"):
            return ("a", "b")
        if tag == "V":
            return ("a", "b", "c")
        return tuple(f"a{i}" for i in range(1, self.n + 1))

    def label(self) -> str:
        bits = [self.tag]
        if self.m is not None:
            bits.append(f"m={self.m}")
        if self.n is not None:
            bits.append(f"n={self.n}")
        if self.t is not None:
            bits.append(f"t={format_rational(self.t)}")
        return " ".join(bits)

    def to_json(self) -> dict:
        out: dict = {"case": self.tag}
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        if self.t is not None:
            out["t"] = format_rational(self.t)
        out["sigma_type"] = self.sigma_type
        if self.sigma_type == "A":
            out.update(r_plus=self.r_plus, r_minus=self.r_minus, theta_J=format_rational(self.theta_J))
        else:
            out["r"] = self.r
        out["n_J"] = self.n_J
        return out


def make_case(tag: str, m: int | None = None, n: int | None = None, t=None) -> JordanCase:
    return JordanCase(tag, m, n, None if t is None else Q(t))


@dataclass(frozen=True)
class Weight:
    basis: tuple[str, ...]
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))
        if len(self.basis) != len(self.coeffs):
            raise CapelliError("DIMENSION_MISMATCH", "one coefficient per basis symbol")

    @classmethod
    def from_dict(cls, basis: Sequence[str], coeffs: dict) -> "Weight":
        unknown = set(coeffs) - set(basis)
        if unknown:
            raise CapelliError("BAD_WEIGHT", f"symbols {sorted(unknown)} not in basis")
        return cls(tuple(basis), tuple(Q(coeffs.get(b, 0)) for b in basis))

    def __getitem__(self, symbol: str) -> Fraction:
        return self.coeffs[self.basis.index(symbol)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {"basis": list(self.basis), "coeffs": [format_rational(c) for c in self.coeffs]}

    def __str__(self):
        bits = [f"{format_rational(c)}*{b}" for b, c in zip(self.basis, self.coeffs) if c]
        return " + ".join(bits) if bits else "0"


def is_multiplicity_free(case: JordanCase) -> bool:
    if case.sigma_type == "Q":
        return True
    return not admissibility_set_contains(case.r_plus, case.r_minus, case.theta_J)


def _require_mf(case: JordanCase):
    if not is_multiplicity_free(case):
        raise CapelliError(
            "NOT_MULTIPLICITY_FREE",
            f"theta_J={format_rational(case.theta_J)} lies in S({case.r_plus},{case.r_minus})",
        )


def in_omega(case: JordanCase, lam: Partition) -> bool:
    if case.sigma_type == "Q":
        return is_strict(lam) and len(lam) <= case.r
    return in_hook(lam, case.r_plus, case.r_minus)


def omega(case: JordanCase, d: int, *, force: bool = False) -> list[Partition]:
    if not force:
        _require_mf(case)
    if case.sigma_type == "Q":
        return enumerate_strict(case.r, d)
    return enumerate_hook(case.r_plus, case.r_minus, d)


def omega_upto(case: JordanCase, d: int, *, force: bool = False) -> list[Partition]:
    return [lam for k in range(d + 1) for lam in omega(case, k, force=force)]


def _require_omega(case: JordanCase, lam: Partition):
    if not in_omega(case, lam):
        raise CapelliError("NOT_IN_OMEGA", f"{list(lam)} is not in Omega for case {case.label()}")


def highest_weight(case: JordanCase, lam: Partition) -> Weight:
    lam = tuple(lam)
    _require_omega(case, lam)
    tag, basis = case.tag, case.weight_basis
    d = sum(lam)
    conj = transpose(lam)
    c: dict[str, Fraction] = {}
    if tag == "I":
        m, n = case.m, case.n
        for i in range(1, m + 1):
            c[f"eps{i}_1"], c[f"eps{i}_2"] = -part(lam, i), part(lam, i)
        for j in range(1, n + 1):
            v = max(part(conj, j) - m, 0)
            c[f"delta{j}_1"], c[f"delta{j}_2"] = -v, v
    elif tag == "II":
        m, n = case.m, case.n
        for i in range(1, m + 1):
            c[f"eps{i}"] = -2 * part(lam, i)
        for j in range(1, n + 1):
            v = max(part(conj, j) - m, 0)
            c[f"delta{2 * j - 1}"] = c[f"delta{2 * j}"] = -v
    elif tag == "III":
        c["eps1"] = part(lam, 1) - part(lam, 2)
        c["zeta"] = part(lam, 1) + part(lam, 2)
    elif tag == "IV":
        t = case.t
        c["eps1"] = (3 + t) / (1 + t) * d - 2 * part(lam, 1)
        c["delta1"] = c["delta2"] = part(lam, 1) - (2 + t) / (1 + t) * d
    elif tag == "V":
        c["eps1"] = 3 * d - 2 * part(lam, 1) - 2 * part(lam, 2)
        c["delta1"] = c["delta2"] = part(lam, 1) - part(lam, 2)
        c["zeta"] = d
    elif tag == "VI":
        for i in range(1, case.n + 1):
            c[f"eps{i}"] = c[f"delta{i}"] = -part(lam, i)
    else:
        for i in range(1, case.n + 1):
            c[f"eps{i}_1"], c[f"eps{i}_2"] = -part(lam, i), part(lam, i)
    return Weight.from_dict(basis, c)


def aomega_coordinates(case: JordanCase, w: Weight) -> tuple[Fraction, ...]:
    """Read the coordinates (a, b, c, ...) of a weight lying in a_Omega."""
    tag = case.tag
    if w.basis != case.weight_basis:
        raise CapelliError("BAD_WEIGHT", "weight basis does not match the case")
    if tag == "I":
        m, n = case.m, case.n
        second = [w[f"eps{i}_2"] for i in range(1, m + 1)] + [w[f"delta{j}_2"] for j in range(1, n + 1)]
        first = [w[f"eps{i}_1"] for i in range(1, m + 1)] + [w[f"delta{j}_1"] for j in range(1, n + 1)]
        ok = all(a == -b for a, b in zip(first, second))
        coords = second
    elif tag == "II":
        a = [w[f"eps{i}"] for i in range(1, case.m + 1)]
        b = [w[f"delta{2 * j - 1}"] for j in range(1, case.n + 1)]
        ok = all(w[f"delta{2 * j}"] == b[j - 1] for j in range(1, case.n + 1))
        coords = a + b
    elif tag == "III":
        ok, coords = True, [w["eps1"], w["zeta"]]
    elif tag == "IV":
        ok, coords = w["delta1"] == w["delta2"], [w["eps1"], w["delta1"]]
    elif tag == "V":
        ok, coords = w["delta1"] == w["delta2"], [w["eps1"], w["delta1"], w["zeta"]]
    elif tag == "VI":
        coords = [w[f"eps{i}"] for i in range(1, case.n + 1)]
        ok = all(w[f"delta{i}"] == coords[i - 1] for i in range(1, case.n + 1))
    else:
        coords = [w[f"eps{i}_2"] for i in range(1, case.n + 1)]
        ok = all(w[f"eps{i}_1"] == -coords[i - 1] for i in range(1, case.n + 1))
    if not ok:
        raise CapelliError("NOT_IN_AOMEGA", f"{w} is not in a_Omega for case {case.label()}")
    return tuple(coords)


def tau(case: JordanCase, convention: str = "printed") -> AffineMap:
    """Affine map a_Omega -> Q^{n_J}.

    ``printed`` is the standard case table verbatim. ``frobenius`` replaces the rows for
    III and IV with the maps that send highest weights to Frobenius
    coordinates (the two conventions coincide for the other cases).
    """
    if convention not in CONVENTIONS:
        raise CapelliError("BAD_CONVENTION", f"convention must be one of {CONVENTIONS}")
    tag, vars = case.tag, case.aomega_vars
    k = len(vars)
    half = Fraction(1, 2)

    def row(*entries):
        return tuple(Q(e) for e in entries)

    if tag in ("I", "II"):
        m, n = case.m, case.n
        rows, off = [], []
        for i in range(1, m + 1):
            scale = 1 if tag == "I" else -half
            rows.append(tuple(Fraction(scale) if col == i - 1 else Fraction(0) for col in range(k)))
            off.append(Fraction(m - 2 * i + 1 - n, 2) if tag == "I" else Fraction(m + 1 - 2 * n - 2 * i, 4))
        for j in range(1, n + 1):
            scale = 1 if tag == "I" else -1
            rows.append(tuple(Fraction(scale) if col == m + j - 1 else Fraction(0) for col in range(k)))
            off.append(Fraction(m - 2 * j + 1 + n, 2) if tag == "I" else Fraction(m + 2 + 2 * n - 4 * j, 2))
        return AffineMap(tuple(rows), tuple(off), vars)
    if tag == "III":
        m, n = case.m, case.n
        if convention == "printed":
            return AffineMap((row(half, half), row(-half, half)), (Fraction(m - 2 * n - 1, 2), 0), vars)
        th = case.theta_J
        return AffineMap((row(half, half), row(-half, half)), (th / 2, -th / 2), vars)
    if tag == "IV":
        t = case.t
        s = 1 + t
        first = row(-(2 + t) / s, -(3 + t) / s)
        if convention == "printed":
            return AffineMap((first, row(1 / s, -(3 + t) / s)), (-half, (5 + t) / s), vars)
        return AffineMap((first, row(1 / s, (1 - t) / s)), (-half, half), vars)
    if tag == "V":
        return AffineMap(
            (row(Fraction(-1, 4), half, Fraction(3, 4)), row(Fraction(-1, 4), -half, Fraction(3, 4)), row(half, 0, -half)),
            (Fraction(1, 4), Fraction(-5, 4), 1),
            vars,
        )
    sign = -1 if tag == "VI" else 1
    rows = tuple(tuple(Fraction(sign) if i == j else Fraction(0) for j in range(k)) for i in range(k))
    return AffineMap(rows, (0,) * k, vars)


def composite_coordinates(case: JordanCase, lam: Partition, convention: str = "printed") -> tuple[Fraction, ...]:
    """tau_J applied to the a_Omega coordinates of the highest weight of V_lambda."""
    return tau(case, convention)(aomega_coordinates(case, highest_weight(case, lam)))


@dataclass(frozen=True)
class RootDatum:
    sigma_type: str
    graded_dims: dict = field(hash=False)
    kappa: Fraction | None

    def multiplicities(self) -> dict[str, Fraction]:
        return {cls: Fraction(-(ev - od), 2) for cls, (ev, od) in self.graded_dims.items()}

    def check(self):
        if self.sigma_type != "A":
            return
        expected = {"eps-eps": self.kappa, "eps-delta": Fraction(1),
                    "delta-delta": None if self.kappa == 0 else 1 / self.kappa}
        for cls, mult in self.multiplicities().items():
            if mult != expected[cls]:
                raise CapelliError("ROOT_DATA_INCONSISTENT", f"mult({cls})={mult}, expected {expected[cls]}")


def root_datum(case: JordanCase) -> RootDatum:
    tag = case.tag
    if case.sigma_type == "Q":
        dims = {"eps-eps": (2, 2)}
        return RootDatum(f"Q({case.r})", dims, None)
    dims = {
        "I": {"eps-eps": (2, 0), "eps-delta": (0, 2), "delta-delta": (2, 0)},
        "II": {"eps-eps": (1, 0), "eps-delta": (0, 2), "delta-delta": (4, 0)},
        "III": {"eps-eps": ((case.m or 0) - 1, 2 * (case.n or 0))},
        "IV": {"eps-delta": (0, 2)},
        "V": {"eps-eps": (3, 0), "eps-delta": (0, 2)},
    }[tag]
    datum = RootDatum(f"A({case.r_plus - 1},{case.r_minus - 1})", dims, -case.theta_J)
    datum.check()
    return datum


# ---------------------------------------------------------------------------
# case-specific decomposition data

_V_BASIS = ("eps1", "delta1", "delta2", "zeta")


def case5_weights_E_d(d: int) -> list[Weight]:
    if d < 0:
        raise ValueError("d >= 0")
    seen = set()
    for q in range(d + 1):
        for r in range(d + 1):
            s = d - q - 2 * r
            if s >= 2:
                seen.add((d + 2 * s - 4, d - 2 * r - s, d - 2 * r - s, d))
    seen.add((d, d, d, d))
    return [Weight(_V_BASIS, c) for c in sorted(seen, reverse=True)]


class DimensionIdentity(NamedTuple):
    lhs: int
    rhs: int
    superspace: int


def sp4_dim(k: int) -> int:
    """Dimension of the sp(4)-module with highest weight k(delta1 + delta2)."""
    return (2 * k + 3) * (k + 2) * (k + 1) // 6


def even_symmetric_power_dim(d: int, even: int = 6, odd: int = 4) -> int:
    """dim S^d(E)_0 for an (even|odd)-dimensional superspace E."""
    return sum(comb(even + d - k - 1, d - k) * comb(odd, k) for k in range(0, min(d, odd) + 1, 2))


def case5_dimension_identity(d: int) -> DimensionIdentity:
    if d < 1:
        raise ValueError("d >= 1")
    typical = sum(sp4_dim(b) for a in range(d - 1) for b in range(d - a - 1) if (b - d + a) % 2 == 0)
    lhs = sp4_dim(d) + sp4_dim(d - 1) + 8 * typical
    rhs_num = (d + 1) * (2 * d * d + 4 * d + 3) * 5 + (d + 3) * (d + 2) * (d + 1) * d * (d - 1)
    if rhs_num % 15:
        raise AssertionError("closed form is not integral")
    return DimensionIdentity(lhs, rhs_num // 15, even_symmetric_power_dim(d))


def case4_eta_weights(t, d: int) -> list[Weight]:
    t = Q(t)
    if t in (0, -1):
        raise CapelliError("BAD_PARAMETERS", "t not in {0, -1}")
    if d < 1:
        raise ValueError("d >= 1")
    out = []
    for k in range(1, d + 1):
        e = d * (3 + t) / (1 + t) - 2 * k
        dl = -d * (2 + t) / (1 + t) + k
        out.append(Weight(("eps1", "delta1", "delta2"), (e, dl, dl)))
    return out
