from fractions import Fraction as F

import pytest

from jordan_capelli.algebra import MPoly
from jordan_capelli.errors import CapelliError
from jordan_capelli.interpolation import (
    factorial_schur_q,
    factorial_schur_q_bruteforce,
    hook_nodes,
    knop_sahi_duality_check,
    strict_nodes,
    super_jack_bruteforce,
    super_jack_shifted,
)
from jordan_capelli.partitions import enumerate_hook, enumerate_strict, hook_product_q, hook_product_theta
from jordan_capelli.rings import is_member

THETAS = [F(1), F(1, 2), F(3, 2)]


@pytest.mark.parametrize("theta", THETAS + [F(5, 3)])
def test_first_super_jack(theta):
    res = super_jack_shifted(1, 1, theta, (1,))
    x, y = MPoly.gens(res.spec.vars)
    assert res.poly == x + y
    assert res.verified


def test_empty_partition_gives_one():
    assert super_jack_shifted(2, 1, F(3, 2), ()).poly == MPoly.constant(("x1", "x2", "y1"), 1)
    assert factorial_schur_q(3, ()).poly == MPoly.constant(("x1", "x2", "x3"), 1)


def test_even_only_ring():
    res = super_jack_shifted(2, 0, 1, (1,))
    brute, unique = super_jack_bruteforce(2, 0, 1, (1,))
    assert res.poly == brute and unique
    (_, empty), (_, one) = hook_nodes(2, 0, 1, 1)
    assert res.poly(empty) == 0 and res.poly(one) == 1


def test_factorial_schur_examples():
    x1, x2 = MPoly.gens(("x1", "x2"))
    assert factorial_schur_q(2, (1,)).poly == x1 + x2
    x = MPoly.var(("x1",), "x1")
    assert factorial_schur_q(1, (2,)).poly == x**2 - x
    p1 = x1 + x2
    assert factorial_schur_q(2, (2,)).poly == p1**2 - p1


def test_errors():
    with pytest.raises(CapelliError) as exc:
        factorial_schur_q(2, (1, 1))
    assert exc.value.code == "NOT_STRICT"
    with pytest.raises(CapelliError) as exc:
        factorial_schur_q(1, (2, 1))
    assert exc.value.code == "LENGTH_EXCEEDED"
    with pytest.raises(CapelliError) as exc:
        super_jack_shifted(1, 1, -1, (1,))
    assert exc.value.code == "INADMISSIBLE_THETA"
    with pytest.raises(CapelliError) as exc:
        super_jack_shifted(1, 1, 1, (2, 2))
    assert exc.value.code == "NOT_IN_HOOK"


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1)])
@pytest.mark.parametrize("theta", THETAS)
def test_reversed_rows_and_bruteforce(m, n, theta):
    for d in range(4):
        for lam in enumerate_hook(m, n, d):
            res = super_jack_shifted(m, n, theta, lam)
            assert res.verified
            assert super_jack_shifted(m, n, theta, lam, reverse_rows=True).poly == res.poly
            brute, unique = super_jack_bruteforce(m, n, theta, lam)
            assert unique and brute == res.poly
            assert res.poly.degree() <= d


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_q_against_bruteforce(n):
    for d in range(5):
        for lam in enumerate_strict(n, d):
            res = factorial_schur_q(n, lam)
            assert res.verified and is_member(res.spec, res.poly)
            assert factorial_schur_q(n, lam, reverse_rows=True).poly == res.poly
            brute, unique = factorial_schur_q_bruteforce(n, lam)
            assert unique and brute == res.poly


@pytest.mark.parametrize("theta", THETAS)
def test_evaluation_table(theta):
    nodes = hook_nodes(2, 1, theta, 4)
    for lam, _ in nodes:
        p = super_jack_shifted(2, 1, theta, lam).poly
        for mu, point in nodes:
            if sum(mu) <= sum(lam):
                assert p(point) == (hook_product_theta(lam, theta) if mu == lam else 0)


def test_q_evaluation_table():
    nodes = strict_nodes(3, 4)
    for lam, _ in nodes:
        p = factorial_schur_q(3, lam).poly
        for mu, point in nodes:
            if sum(mu) <= sum(lam):
                assert p(point) == (hook_product_q(lam) if mu == lam else 0)


def test_result_json():
    obj = super_jack_shifted(1, 1, 1, (1,)).to_json()
    assert obj["lambda"] == [1] and obj["verified"] is True
    assert obj["spec"]["theta"] == "1"


@pytest.mark.parametrize("k, theta, lam", [(1, F(2), (1,)), (2, F(3, 2), (2, 1)), (2, F(2), ())])
def test_duality_examples(k, theta, lam):
    assert knop_sahi_duality_check(k, theta, lam)
