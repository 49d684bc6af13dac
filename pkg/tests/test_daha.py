import pytest

from stablemac.combinat import compositions, s_i
from stablemac.daha import (RELATION_FAMILIES, beta, cherednik_Y, intertwiner_phi, oracle_E,
                            perturbed_rep, relation_check, weight_alpha, weight_alpha_tilde)
from stablemac.qt import ONE, ZERO, QtScalar, qt
from stablemac.xpoly import XPoly, demazure_T

x = XPoly.monomial


def mono(i, j):
    return QtScalar.monomial(i, j)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_Y_on_one(n):
    for i in range(1, n + 1):
        assert cherednik_Y(i, XPoly.one(n)) == XPoly.one(n).scale(mono(0, 1 - i))


def test_Y_on_x1():
    assert beta((1, 0), 1) == 2 and beta((1, 0), 2) == 1
    assert cherednik_Y(1, x((1, 0))) == x((1, 0), mono(1, -1))
    assert cherednik_Y(2, x((1, 0))) == x((1, 0))


def test_Y_commute():
    f = x((2, 0, 1)) + x((0, 1, 1), qt("q"))
    for i in range(1, 4):
        for j in range(i + 1, 4):
            assert cherednik_Y(i, cherednik_Y(j, f)) == cherednik_Y(j, cherednik_Y(i, f))


def test_relations_small():
    (braid,) = relation_check(3, (0, 2), families=["(i) braid"])
    assert braid.status == "pass" and braid.checked > 0
    (iv,) = relation_check(2, (-1, 2), families=["(iv)"])
    assert iv.status == "pass" and iv.checked > 0
    reports = relation_check(4, (0, 1))
    assert {r.relation for r in reports} == set(RELATION_FAMILIES)
    assert all(r.status == "pass" for r in reports)


def test_perturbed_T_is_caught():
    (quad,) = relation_check(2, (-1, 1), families=["(i) quadratic"], rep=perturbed_rep(2))
    assert quad.status == "fail"
    assert quad.counterexample["monomial"]


def test_weights():
    assert weight_alpha_tilde((0, 2)) == [ZERO, mono(2, 1)]
    assert weight_alpha_tilde((1, 1, 1))[0] == mono(1, 3)
    assert weight_alpha_tilde((0, 3, 0))[0] == ZERO
    assert weight_alpha_tilde((0, 3, 0))[2] == ZERO
    # the limit weight is t^n times the finite one on nonzero parts
    mu = (2, 0, 1)
    for a, b, p in zip(weight_alpha(mu), weight_alpha_tilde(mu), mu):
        assert b == (a * mono(0, 3) if p else ZERO)


def test_oracle_small():
    assert oracle_E((1,)) == x((1,))
    for a in range(4):
        assert oracle_E((a,)) == x((a,))
    assert oracle_E(()) == XPoly(0, {(): ONE})
    E02 = oracle_E((0, 2))
    assert E02.coefficient((0, 2)) == ONE
    assert E02.coefficient((2, 0))


@pytest.mark.parametrize("mu", [mu for d in range(4) for mu in compositions(d, 3)])
def test_oracle_is_eigenvector(mu):
    E = oracle_E(mu)
    for i, a in enumerate(weight_alpha(mu), start=1):
        assert cherednik_Y(i, E) == E.scale(a)


@pytest.mark.parametrize("mu", [(2, 0), (1, 0), (2, 1), (3, 1, 0), (1, 0, 1), (2, 0, 0)])
def test_finite_intertwiner(mu):
    al = weight_alpha(mu)
    for i in range(1, len(mu)):
        if mu[i - 1] > mu[i]:
            lhs = intertwiner_phi(i, oracle_E(mu))
            assert lhs == oracle_E(s_i(mu, i)).scale(al[i - 1] - al[i])


def test_intertwiner_kills_one():
    assert not intertwiner_phi(1, XPoly.one(2))


def test_T_examples():
    assert demazure_T(1, x((1, 0))) == x((0, 1)) + x((1, 0), qt("1 - t"))
    assert demazure_T(1, x((0, 1))) == x((1, 0), qt("t"))


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        relation_check(2, (0, 1), families=["(i)"])
