"""Exact scalars, sparse multivariate polynomials and rational linear algebra.

Scalars are :class:`fractions.Fraction` throughout. Polynomials are immutable
maps from exponent tuples to nonzero coefficients over a fixed, ordered list of
variable names; iteration and serialization use descending graded
lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import CapelliError

Rational = Fraction


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MPoly:
    """Sparse polynomial over Q in the variables ``vars``."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], object] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise CapelliError("DIMENSION_MISMATCH", f"bad exponent vector {exps} for vars {self.vars}")
            c = Q(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, vars: Sequence[str], c=1) -> "MPoly":
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MPoly":
        return cls(vars)

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(name)
        return cls(vars, {tuple(1 if k == i else 0 for k in range(len(vars))): 1})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> list["MPoly"]:
        return [cls.var(vars, v) for v in vars]

    # basic protocol
    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def monomials(self) -> set[tuple[int, ...]]:
        return set(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(e) for e in self._terms), default=-1)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for exps, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            if not mono:
                out.append(format_rational(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{format_rational(c)}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    # arithmetic
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise CapelliError("DIMENSION_MISMATCH", f"variables {other.vars} != {self.vars}")
            return other
        return MPoly.constant(self.vars, Q(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Q(other)
            return MPoly(self.vars, {e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Q(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # evaluation and substitution
    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.vars):
            raise CapelliError("DIMENSION_MISMATCH", f"point of length {len(point)} for {len(self.vars)} variables")
        point = [Q(p) for p in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term *= x**e
            total += term
        return total

    __call__ = evaluate

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Replace the i-th variable by ``images[i]`` (all over one common variable list)."""
        if len(images) != len(self.vars):
            raise CapelliError("DIMENSION_MISMATCH", "need one image per variable")
        if not images:
            return MPoly((), self._terms)
        target_vars = images[0].vars
        powers: list[dict[int, MPoly]] = [{} for _ in images]

        def power(i, e):
            if e not in powers[i]:
                powers[i][e] = images[i] ** e
            return powers[i][e]

        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            piece = MPoly.constant(target_vars, c)
            for i, e in enumerate(exps):
                if e:
                    piece = piece * power(i, e)
            for m, v in piece._terms.items():
                terms[m] = terms.get(m, 0) + v
        return MPoly(target_vars, terms)

    def subs(self, mapping: Mapping[str, object]) -> "MPoly":
        """Substitute some variables (by name) with polynomials or scalars over the same variable list."""
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                images.append(img if isinstance(img, MPoly) else MPoly.constant(self.vars, img))
            else:
                images.append(MPoly.var(self.vars, v))
        return self.substitute(images)

    def shift(self, offsets: Sequence) -> "MPoly":
        """p(v + offsets)."""
        gens = MPoly.gens(self.vars)
        return self.substitute([g + Q(o) for g, o in zip(gens, offsets)])

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Return q with q(v) = p(v[perm[0]], v[perm[1]], ...)."""
        return MPoly(self.vars, {tuple(exps[perm.index(k)] for k in range(len(perm))): c
                                 for exps, c in self._terms.items()})

    def involves(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(e[i] for e in self._terms)

    def rename(self, vars: Sequence[str]) -> "MPoly":
        vars = tuple(vars)
        if len(vars) != len(self.vars):
            raise CapelliError("DIMENSION_MISMATCH", "rename needs the same number of variables")
        return MPoly(vars, self._terms)

    # serialization
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exps": list(e), "coef": format_rational(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MPoly":
        return cls(obj["vars"], {tuple(t["exps"]): Fraction(t["coef"]) for t in obj["terms"]})


@dataclass(frozen=True)
class AffineMap:
    """v -> matrix @ v + offset, from ``domain_vars`` coordinates to ``len(offset)`` coordinates."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]
    domain_vars: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(Q(x) for x in row) for row in self.matrix))
        object.__setattr__(self, "offset", tuple(Q(x) for x in self.offset))
        object.__setattr__(self, "domain_vars", tuple(self.domain_vars))
        if len(self.matrix) != len(self.offset):
            raise CapelliError("DIMENSION_MISMATCH", "matrix rows and offset differ in length")
        if any(len(row) != len(self.domain_vars) for row in self.matrix):
            raise CapelliError("DIMENSION_MISMATCH", "matrix columns must match the domain variables")

    @classmethod
    def identity(cls, vars: Sequence[str]) -> "AffineMap":
        n = len(vars)
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n, tuple(vars))

    @classmethod
    def from_forms(cls, forms: Sequence[MPoly]) -> "AffineMap":
        """Build from a list of affine polynomials (one per codomain coordinate)."""
        vars = forms[0].vars
        n = len(vars)
        rows, offset = [], []
        for f in forms:
            if f.degree() > 1:
                raise CapelliError("NOT_AFFINE", repr(f))
            rows.append(tuple(f.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)))
            offset.append(f.coefficient((0,) * n))
        return cls(tuple(rows), tuple(offset), vars)

    @property
    def domain_dim(self) -> int:
        return len(self.domain_vars)

    @property
    def codomain_dim(self) -> int:
        return len(self.offset)

    def __call__(self, point: Sequence) -> tuple[Fraction, ...]:
        point = [Q(p) for p in point]
        if len(point) != self.domain_dim:
            raise CapelliError("DIMENSION_MISMATCH", "point does not match the domain")
        return tuple(sum((a * x for a, x in zip(row, point)), Fraction(0)) + o
                     for row, o in zip(self.matrix, self.offset))

    def forms(self) -> list[MPoly]:
        gens = MPoly.gens(self.domain_vars)
        out = []
        for row, o in zip(self.matrix, self.offset):
            f = MPoly.constant(self.domain_vars, o)
            for a, g in zip(row, gens):
                if a:
                    f = f + g * a
            out.append(f)
        return out

    def inverse(self, vars: Sequence[str]) -> "AffineMap":
        """Exact inverse; ``vars`` names the coordinates of the (old) codomain."""
        n = self.domain_dim
        if self.codomain_dim != n:
            raise CapelliError("NOT_INVERTIBLE", "non-square affine map")
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.matrix)]
        red, pivots = row_reduce(aug)
        if pivots[:n] != list(range(n)):
            raise CapelliError("NOT_INVERTIBLE", "singular affine map")
        inv = [row[n:] for row in red[:n]]
        off = [-sum((inv[i][j] * self.offset[j] for j in range(n)), Fraction(0)) for i in range(n)]
        return AffineMap(tuple(tuple(r) for r in inv), tuple(off), tuple(vars))


def poly_eval(p: MPoly, point: Sequence) -> Fraction:
    return p.evaluate(point)


def poly_compose_affine(p: MPoly, amap: AffineMap) -> MPoly:
    """Pullback p ∘ amap, a polynomial in ``amap.domain_vars``."""
    if amap.codomain_dim != len(p.vars):
        raise CapelliError("DIMENSION_MISMATCH",
                           f"map lands in dimension {amap.codomain_dim}, polynomial has {len(p.vars)} variables")
    return p.substitute(amap.forms())


def bernoulli_poly(t: int, var: str = "z") -> MPoly:
    """B_t(z) from the explicit double sum sum_i 1/(i+1) sum_j (-1)^j C(i,j) (z+j)^t."""
    if t < 0:
        raise ValueError("t must be non-negative")
    z = MPoly.var((var,), var)
    total = MPoly.zero((var,))
    for i in range(t + 1):
        inner = MPoly.zero((var,))
        for j in range(i + 1):
            inner = inner + (z + j) ** t * ((-1) ** j * comb(i, j))
        total = total + inner * Fraction(1, i + 1)
    return total


# ---------------------------------------------------------------------------
# linear algebra


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with first-nonzero-row pivoting, column by column.

    Returns (rref, pivot_columns). Input is not modified.
    """
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        k = next((i for i in range(r, len(m)) if m[i][c]), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = 1 / m[r][c]
        pivot_row = [x * inv for x in m[r]]
        m[r] = pivot_row
        nz = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1]) if rows else 0


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(Q(x) for x in row) for row in self.matrix))
        object.__setattr__(self, "rhs", tuple(Q(x) for x in self.rhs))
        if len(self.matrix) != len(self.rhs):
            raise CapelliError("DIMENSION_MISMATCH", "one rhs entry per row")
        if len({len(row) for row in self.matrix}) > 1:
            raise CapelliError("DIMENSION_MISMATCH", "ragged matrix")

    @property
    def ncols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def solve(self) -> list[Fraction]:
        return solve_exact(self)


def solve_exact(sys: LinearSystem, ncols: int | None = None) -> list[Fraction]:
    """One solution of ``sys`` with all free variables set to zero.

    Raises CapelliError("INCONSISTENT") when there is none.
    """
    n = sys.ncols if ncols is None else ncols
    aug = [list(row) + [b] for row, b in zip(sys.matrix, sys.rhs)]
    red, pivots = row_reduce(aug)
    if n in pivots:
        raise CapelliError("INCONSISTENT", "linear system has no solution")
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return x


def nullity(matrix: Sequence[Sequence]) -> int:
    return (len(matrix[0]) if matrix else 0) - rank(matrix)


def coefficient_matrix(polys: Sequence[MPoly]) -> tuple[list[list[Fraction]], list[tuple[int, ...]]]:
    """Rows of coefficients over the sorted union of occurring monomials."""
    monos = sorted(set().union(*(p.monomials() for p in polys)) if polys else set(),
                   key=_grlex_key, reverse=True)
    return [[p.coefficient(m) for m in monos] for p in polys], monos


class Membership(NamedTuple):
    in_span: bool
    rank: int


def rank_and_membership(span: Sequence[MPoly], target: MPoly) -> Membership:
    rows, _ = coefficient_matrix(list(span) + [target])
    r = rank(rows[:-1]) if span else 0
    return Membership(rank(rows) == r, r)


def linear_combination(polys: Iterable[MPoly], coeffs: Iterable, vars: Sequence[str]) -> MPoly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for p, c in zip(polys, coeffs):
        if c:
            for e, v in p._terms.items():
                terms[e] = terms.get(e, 0) + c * v
    return MPoly(vars, terms)
