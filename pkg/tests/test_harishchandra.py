from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from jordan_capelli.algebra import MPoly, linear_combination, rank_and_membership
from jordan_capelli.errors import CapelliError
from jordan_capelli.harishchandra import (
    case6_shifted_family,
    f_case_coordinate_identity,
    f_case_display_poly,
    f_case_display_y_weight,
    f_case_h,
    f_case_membership,
    f_case_obstruction,
    generator_membership,
    hc_generators,
    hc_surjectivity_check,
    product_span,
    pullback_to_ring,
    tau_pullback,
    to_tilde,
)
from jordan_capelli.jordan import make_case
from jordan_capelli.rings import deformed_power_sum, is_member, spanning_set

ABC = ("a", "b", "c")
a, b, c = MPoly.gens(ABC)


def test_case_three_generators():
    case = make_case("III", 3, 1)
    gens = hc_generators(case, 2).generators
    ca, cb = MPoly.gens(case.aomega_vars)
    assert gens == [cb, (ca + (F(4, 2) - 1 - 1)) ** 2]


def test_case_six_generators():
    case = make_case("VI", n=2)
    a1, a2 = MPoly.gens(case.aomega_vars)
    assert hc_generators(case, 3).generators == [a1 + a2, a1**3 + a2**3]


def test_case_five_first_generator():
    gens = hc_generators(make_case("V"), 1, 0)
    assert gens.family("f") == [(a + 2) ** 2 - (b + 2) ** 2 - (b + 1) ** 2]
    assert gens.family("Q") == [c]
    assert len(gens.family("F")) == 1 and gens.family("F")[0].degree() == 5


def test_case_seven_unsupported():
    with pytest.raises(CapelliError) as exc:
        hc_generators(make_case("VII", n=2), 2)
    assert exc.value.code == "UNSUPPORTED_CASE"


@pytest.mark.parametrize("tag, m, n, t", [
    ("I", 1, 1, None), ("I", 2, 1, None), ("I", 1, 2, None), ("II", 1, 1, None), ("II", 2, 1, None),
    ("III", 3, 1, None), ("III", 4, 2, None), ("VI", None, 2, None), ("VI", None, 3, None),
])
def test_generators_pull_back_into_ring(tag, m, n, t):
    assert all(generator_membership(make_case(tag, m, n, t), 4).values())


@pytest.mark.parametrize("t", [F(-2), F(-1, 2)])
def test_case_four_generators_need_frobenius_map(t):
    case = make_case("IV", t=t)
    assert all(generator_membership(case, 4, convention="frobenius").values())
    assert not any(generator_membership(case, 4).values())
    printed = generator_membership(case, 4, convention="frobenius", printed_iv=True)
    assert printed["f[1]"] and not printed["f[2]"]


def test_f_case_generators_in_ring():
    assert all(generator_membership(make_case("V"), 3, max_g_degree=2).values())


@pytest.mark.parametrize("tag, m, n, d", [("I", 1, 1, 2), ("VI", None, 2, 3), ("III", 3, 1, 2), ("VII", None, 2, 3),
                                          ("II", 1, 1, 3), ("I", 1, 1, 3)])
def test_surjectivity(tag, m, n, d):
    rep = hc_surjectivity_check(make_case(tag, m, n), d)
    assert rep.ok and rep.rank == rep.target_rank


@pytest.mark.parametrize("tag, m, n", [("I", 1, 1), ("III", 3, 1), ("VI", None, 2)])
def test_surjectivity_monotone(tag, m, n):
    case = make_case(tag, m, n)
    results = [hc_surjectivity_check(case, d).ok for d in range(1, 4)]
    for hi, lo in zip(results[1:], results[:-1]):
        assert lo or not hi


def test_surjectivity_refusals():
    with pytest.raises(CapelliError):
        hc_surjectivity_check(make_case("V"), 2)
    with pytest.raises(CapelliError) as exc:
        hc_surjectivity_check(make_case("IV", t=1), 2)
    assert exc.value.code == "NOT_MULTIPLICITY_FREE"


def test_obstruction():
    assert f_case_obstruction()


def test_obstruction_sanity():
    case = make_case("V")
    span = product_span(hc_generators(case, 2).generators, ABC, 3)
    assert rank_and_membership(span, f_case_h(1)).in_span
    assert rank_and_membership(span, f_case_h(3)).rank <= 6
    f1 = (a + 2) ** 2 - (b + 2) ** 2 - (b + 1) ** 2
    one = MPoly.constant(ABC, 1)
    basis = [one, c, c**2, c**3, f1, c * f1]
    assert rank_and_membership(basis, f_case_h(3)).in_span is False
    assert all(rank_and_membership(basis, p).in_span for p in span)


def test_display_poly_coefficients():
    disp = f_case_display_poly()
    assert disp.coefficient((0, 0, 3)) == F(81, 64)
    assert disp.coefficient((1, 0, 2)) == F(-135, 128)
    assert disp.coefficient((1, 1, 1)) == F(27, 128)


def test_tilde_coordinates():
    tc = MPoly.var(("at", "bt", "ct"), "ct")
    assert to_tilde(c) == tc
    case = make_case("V")
    x1, x2, y1 = MPoly.gens(case.ring.vars)
    at, bt, _ = MPoly.gens(("at", "bt", "ct"))
    assert to_tilde(tau_pullback(case, x1 * 2 + y1 * 3)) == at
    assert to_tilde(tau_pullback(case, x2 * 2 + y1 * 3)) == bt


def test_coordinate_identity_against_reference():
    # the reference expansion does not match tau^*(h_3); recorded, not adjusted
    assert f_case_coordinate_identity() is False
    ours = to_tilde(f_case_h(3))
    assert ours.coefficient((0, 0, 3)) == F(9, 16)
    assert ours.coefficient((1, 0, 2)) == 0


def test_display_corresponds_to_other_y_weight():
    assert f_case_display_y_weight() == F(-27, 8)


def test_lemma_examples():
    assert f_case_membership(c)
    assert not f_case_membership(b)
    case = make_case("V")
    assert f_case_membership(tau_pullback(case, deformed_power_sum(case.ring, 2)))


_CASE = make_case("V")
_BASIS = [tau_pullback(_CASE, g) for g in spanning_set(_CASE.ring, 4)]


@given(st.lists(st.integers(-3, 3), min_size=len(_BASIS), max_size=len(_BASIS)))
def test_lemma_accepts_span_members(coeffs):
    p = linear_combination(_BASIS, [F(x) for x in coeffs], ABC)
    assert f_case_membership(p)
    assert is_member(_CASE.ring, pullback_to_ring(_CASE, p))


@st.composite
def abc_polys(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        e = (draw(st.integers(0, 2)), draw(st.integers(0, 2)), draw(st.integers(0, 1)))
        terms[e] = F(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
    return MPoly(ABC, terms)


@given(abc_polys())
def test_lemma_agrees_with_ring(p):
    assert f_case_membership(p) == is_member(_CASE.ring, pullback_to_ring(_CASE, p))


def test_case_six_alternative_family_in_span():
    case = make_case("VI", n=2)
    for d in range(1, 5):
        span = product_span(hc_generators(case, d).generators, case.aomega_vars, d)
        for f in case6_shifted_family(2, d):
            assert rank_and_membership(span, f).in_span
