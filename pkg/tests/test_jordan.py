from fractions import Fraction as F

import pytest

from jordan_capelli.errors import CapelliError
from jordan_capelli.jordan import (
    CASES,
    Weight,
    admissibility_set_contains,
    aomega_coordinates,
    case4_eta_weights,
    case5_dimension_identity,
    case5_weights_E_d,
    composite_coordinates,
    even_symmetric_power_dim,
    highest_weight,
    is_multiplicity_free,
    make_case,
    omega,
    omega_upto,
    root_datum,
    tau,
)
from jordan_capelli.partitions import enumerate_hook, frobenius_coords


def test_case_constants():
    assert make_case("I", 2, 1).theta_J == 1
    assert make_case("II", 1, 1).theta_J == F(1, 2)
    assert make_case("III", 4, 1).theta_J == F(1, 2)
    assert make_case("IV", t=2).theta_J == F(-1, 2)
    assert make_case("V").theta_J == F(3, 2)
    c = make_case("V")
    assert (c.r_plus, c.r_minus, c.n_J) == (2, 1, 3)
    assert make_case("VII", n=3).sigma_type == "Q" and make_case("VII", n=3).r == 3


@pytest.mark.parametrize("tag, m, n, t", [
    ("IV", None, None, None), ("IV", None, None, 0), ("IV", None, None, -1), ("I", 1, None, None),
    ("VI", None, 1, None), ("VII", None, 1, None), ("V", 1, 1, None), ("X", None, None, None), ("II", 1, 1, 2),
])
def test_bad_parameters(tag, m, n, t):
    with pytest.raises(CapelliError):
        make_case(tag, m, n, t)


def test_admissibility_set():
    assert admissibility_set_contains(1, 1, -1)
    assert not admissibility_set_contains(1, 0, F(-1, 2))
    assert admissibility_set_contains(0, 2, F(-1, 2))
    assert not admissibility_set_contains(0, 2, F(-3, 2))
    assert admissibility_set_contains(3, 0, F(-5, 2))
    assert not admissibility_set_contains(3, 0, F(-5, 3))


def test_multiplicity_free():
    assert not is_multiplicity_free(make_case("IV", t=1))
    assert is_multiplicity_free(make_case("I", 3, 2))
    assert is_multiplicity_free(make_case("VI", n=4))
    with pytest.raises(CapelliError) as exc:
        omega(make_case("IV", t=1), 1)
    assert exc.value.code == "NOT_MULTIPLICITY_FREE"
    assert omega(make_case("IV", t=1), 1, force=True) == [(1,)]


def test_omega_examples():
    assert omega(make_case("V"), 2) == [(2,), (1, 1)]
    assert omega(make_case("VII", n=2), 3) == [(3,), (2, 1)]
    assert omega(make_case("III", 3, 1), 3) == [(3,), (2, 1)]


@pytest.mark.parametrize("tag, m, n, t", [("I", 2, 1, None), ("II", 1, 2, None), ("III", 3, 1, None),
                                          ("IV", None, None, -2), ("V", None, None, None), ("VI", None, 2, None),
                                          ("VII", None, 3, None)])
def test_empty_weight_is_zero(tag, m, n, t):
    case = make_case(tag, m, n, t)
    w = highest_weight(case, ())
    assert w.is_zero() and w.basis == case.weight_basis


def test_weight_examples():
    v = make_case("V")
    assert highest_weight(v, (2,)) == Weight.from_dict(v.weight_basis, {"eps1": 2, "delta1": 2, "delta2": 2, "zeta": 2})
    assert highest_weight(v, (1, 1)) == Weight.from_dict(v.weight_basis, {"eps1": 2, "zeta": 2})
    i = make_case("I", 1, 1)
    w = highest_weight(i, (2, 1))
    assert w["eps1_2"] == 2 and w["delta1_2"] == 1 and w["eps1_1"] == -2
    with pytest.raises(CapelliError) as exc:
        highest_weight(i, (2, 2))
    assert exc.value.code == "NOT_IN_OMEGA"


def test_aomega_rejects_foreign_weight():
    v = make_case("V")
    with pytest.raises(CapelliError):
        aomega_coordinates(v, Weight(v.weight_basis, (1, 1, 0, 0)))


def test_composite_examples():
    assert composite_coordinates(make_case("V"), (3, 1)) == (F(13, 4), F(-1, 4), 1)
    assert composite_coordinates(make_case("VII", n=3), (2, 1)) == (2, 1, 0)
    assert composite_coordinates(make_case("I", 1, 1), (2,)) == (F(3, 2), F(1, 2))


def test_case_five_coordinates():
    v = make_case("V")
    for lam in omega_upto(v, 6):
        d = sum(lam)
        lam1, lam2 = (lam + (0, 0))[:2]
        expected = (lam1 + F(1, 4), lam2 - F(5, 4), d - lam1 - lam2 + 1)
        assert composite_coordinates(v, lam) == expected == frobenius_coords(lam, 2, 1, F(3, 2)).point()


@pytest.mark.parametrize("tag", ["I", "II"])
@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (1, 2)])
def test_type_a_coordinates_are_frobenius(tag, m, n):
    case = make_case(tag, m, n)
    for lam in omega_upto(case, 5):
        assert composite_coordinates(case, lam) == frobenius_coords(lam, m, n, case.theta_J).point()


@pytest.mark.parametrize("tag, n", [("VI", 2), ("VI", 3), ("VII", 2), ("VII", 3)])
def test_type_q_coordinates(tag, n):
    case = make_case(tag, n=n)
    for lam in omega_upto(case, 6):
        assert composite_coordinates(case, lam) == tuple(lam) + (0,) * (n - len(lam))


def test_case_three_printed_shift():
    case = make_case("III", 4, 1)
    th = case.theta_J
    for lam in omega_upto(case, 4):
        l1, l2 = (lam + (0, 0))[:2]
        assert composite_coordinates(case, lam) == (l1 + th, l2)
        assert composite_coordinates(case, lam, "frobenius") == frobenius_coords(lam, 2, 0, th).point()


@pytest.mark.parametrize("t", [F(-2), F(-3, 2), F(-1, 2), F(3)])
def test_case_four_conventions(t):
    case = make_case("IV", t=t)
    lams = omega_upto(case, 4, force=True)
    fro = [frobenius_coords(lam, 1, 1, case.theta_J).point() for lam in lams]
    assert [composite_coordinates(case, lam, "frobenius") for lam in lams] == fro
    assert [composite_coordinates(case, lam) for lam in lams] != fro
    # the printed first coordinate already agrees
    assert all(composite_coordinates(case, lam)[0] == p[0] for lam, p in zip(lams, fro))


def test_case_four_printed_map_singular_at_minus_three():
    with pytest.raises(CapelliError):
        tau(make_case("IV", t=-3)).inverse(("x1", "y1"))
    tau(make_case("IV", t=-3), "frobenius").inverse(("x1", "y1"))


def test_bad_convention():
    with pytest.raises(CapelliError):
        tau(make_case("V"), "other")


@pytest.mark.parametrize("tag, m, n, t", [("I", 1, 1, None), ("II", 2, 1, None), ("III", 4, 1, None),
                                          ("IV", None, None, 2), ("V", None, None, None)])
def test_root_multiplicities(tag, m, n, t):
    datum = root_datum(make_case(tag, m, n, t))
    kappa = datum.kappa
    mult = datum.multiplicities()
    assert mult.get("eps-eps", kappa) == kappa
    assert mult.get("eps-delta", 1) == 1
    if "delta-delta" in mult:
        assert mult["delta-delta"] == 1 / kappa


def test_root_datum_examples():
    assert root_datum(make_case("II", 1, 1)).multiplicities() == {"eps-eps": F(-1, 2), "eps-delta": 1, "delta-delta": -2}
    assert root_datum(make_case("V")).multiplicities()["eps-eps"] == F(-3, 2)
    assert root_datum(make_case("VI", n=2)).sigma_type == "Q(2)"


def test_e_d_examples():
    basis = ("eps1", "delta1", "delta2", "zeta")
    assert set(case5_weights_E_d(2)) == {Weight(basis, (2, 0, 0, 2)), Weight(basis, (2, 2, 2, 2))}
    assert case5_weights_E_d(0) == [Weight(basis, (0, 0, 0, 0))]


@pytest.mark.parametrize("d", range(7))
def test_e_d_is_table_image(d):
    v = make_case("V")
    image = {highest_weight(v, lam) for lam in omega(v, d)}
    e_d = case5_weights_E_d(d)
    assert len(e_d) == len(enumerate_hook(2, 1, d))
    assert set(e_d) == image


def test_dimension_identity():
    assert case5_dimension_identity(1) == (6, 6, 6)
    assert case5_dimension_identity(2) == (27, 27, 27)
    assert case5_dimension_identity(3).lhs == 92
    for d in range(1, 7):
        ident = case5_dimension_identity(d)
        assert ident.lhs == ident.rhs == ident.superspace == even_symmetric_power_dim(d)


@pytest.mark.parametrize("t", [F(1, 2), F(2), F(3)])
def test_eta_weights_match_table(t):
    case = make_case("IV", t=t)
    for d in range(1, 6):
        etas = case4_eta_weights(t, d)
        hooks = [(k,) + (1,) * (d - k) for k in range(1, d + 1)]
        assert etas == [highest_weight(case, lam) for lam in hooks]


def test_eta_first():
    t = F(2)
    (eta,) = case4_eta_weights(t, 1)
    assert eta.coeffs == ((3 + t) / (1 + t) - 2, 1 - (2 + t) / (1 + t), 1 - (2 + t) / (1 + t))
    assert case4_eta_weights(2, 3)[0]["eps1"] == 5 - 2


def test_json_forms():
    obj = make_case("IV", t=F(-3, 2)).to_json()
    assert obj["t"] == "-3/2" and obj["theta_J"] == "2/3"
    assert set(CASES) == {"I", "II", "III", "IV", "V", "VI", "VII"}
