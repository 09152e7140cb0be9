from fractions import Fraction as F

import pytest
from hypothesis import given, assume, strategies as st

from jordan_capelli.algebra import (
    AffineMap,
    LinearSystem,
    MPoly,
    Q,
    bernoulli_poly,
    format_rational,
    poly_compose_affine,
    poly_eval,
    rank,
    rank_and_membership,
    row_reduce,
    solve_exact,
)
from jordan_capelli.errors import CapelliError

XY = ("x", "y")
x, y = MPoly.gens(XY)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_rational_normal_form():
    assert Q("6/4") == F(3, 2)
    assert format_rational(F(3, 2)) == "3/2"
    assert format_rational(F(-4, 2)) == "-2"
    assert format_rational(0) == "0"


def test_zero_coefficients_dropped():
    p = x + y - y
    assert p == x
    assert len(p) == 1


def test_grlex_order():
    p = x + y**2 + x * y + 1
    assert [e for e, _ in p.items()] == [(1, 1), (0, 2), (1, 0), (0, 0)]


def test_json_round_trip():
    p = x**2 * F(1, 3) - y + 2
    obj = p.to_json()
    assert obj["terms"][0] == {"exps": [2, 0], "coef": "1/3"}
    assert MPoly.from_json(obj) == p


@pytest.mark.parametrize("t, expected", [
    (0, {(0,): 1}),
    (1, {(1,): 1, (0,): F(-1, 2)}),
    (2, {(2,): 1, (1,): -1, (0,): F(1, 6)}),
])
def test_bernoulli_small(t, expected):
    assert bernoulli_poly(t) == MPoly(("z",), expected)


@pytest.mark.parametrize("t", range(1, 7))
def test_bernoulli_difference(t):
    b = bernoulli_poly(t)
    z = MPoly.var(("z",), "z")
    assert b.substitute([z + 1]) - b == z ** (t - 1) * t


def test_eval_examples():
    assert poly_eval(x + y, (F(1, 2), F(1, 2))) == 1
    xx = MPoly.var(("x",), "x")
    assert poly_eval(xx**2 - xx, (2,)) == 2
    assert poly_eval(MPoly.constant(XY, 1), (7, -3)) == 1


def test_compose_examples():
    assert poly_compose_affine(x, AffineMap.identity(XY)) == x
    ab = ("a", "b")
    shift = AffineMap(((1, 0), (0, 1)), (1, -1), ab)
    a, b = MPoly.gens(ab)
    assert poly_compose_affine(x + y, shift) == a + b


def test_solve_examples():
    assert solve_exact(LinearSystem([[1, 0], [0, 1]], [3, 4])) == [3, 4]
    assert solve_exact(LinearSystem([[1, 1]], [2])) == [2, 0]
    with pytest.raises(CapelliError) as exc:
        solve_exact(LinearSystem([[1, 1], [2, 2]], [2, 5]))
    assert exc.value.code == "INCONSISTENT"


def test_membership_examples():
    assert rank_and_membership([x], x * 2) == (True, 1)
    assert rank_and_membership([x], y) == (False, 1)
    assert rank_and_membership([x + y, x - y], x) == (True, 2)


def test_rref_is_canonical():
    m, piv = row_reduce([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert m[0] == [1, 2, 0] and m[1] == [0, 0, 1]


@st.composite
def polys(draw, vars=XY, max_deg=3):
    n = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in vars)
        terms[e] = draw(small)
    return MPoly(vars, terms)


@st.composite
def invertible_maps(draw):
    m = [[draw(small) for _ in range(2)] for _ in range(2)]
    assume(m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0)
    return AffineMap(tuple(map(tuple, m)), (draw(small), draw(small)), ("u", "v"))


@given(polys(), invertible_maps())
def test_affine_round_trip(p, amap):
    there = poly_compose_affine(p, amap)
    back = poly_compose_affine(there, amap.inverse(XY))
    assert back == p


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4), st.lists(small, min_size=3, max_size=3))
def test_solve_reproduces_rhs(rows, xs):
    rhs = [sum(a * b for a, b in zip(r, xs)) for r in rows]
    sol = solve_exact(LinearSystem(rows, rhs), ncols=3)
    assert [sum(a * b for a, b in zip(r, sol)) for r in rows] == rhs


@given(polys(), polys())
def test_ring_axioms(p, q):
    assert (p + q) * (p - q) == p * p - q * q
    pt = (F(1, 3), F(-2))
    assert (p * q)(pt) == p(pt) * q(pt)


def test_rank_of_dependent_rows():
    assert rank([[1, 2], [2, 4], [0, 0]]) == 1
