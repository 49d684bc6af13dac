"""The filling conventions in ``stablemac.hhl`` are pinned here against the
eigen-oracle, which knows nothing about fillings."""

import pytest

from stablemac.combinat import bruhat_support_ok, compositions
from stablemac.daha import oracle_E
from stablemac.hhl import (Filling, arm, convergence_witness, enumerate_fillings, gamma_factor,
                           hhl_E, leg, stable_E)
from stablemac.qt import ONE, QtScalar, qt
from stablemac.xpoly import XPoly

omt = qt("1 - t")
SMALL = [mu for n in range(1, 4) for d in range(4) for mu in compositions(d, n)]


def test_enumeration_edges():
    assert len(list(enumerate_fillings((1,), 1))) == 1
    (empty,) = enumerate_fillings((0, 0, 0))
    assert empty.labels == ()
    assert list(enumerate_fillings((1,), 2, {2: 2})) == []


@pytest.mark.parametrize("mu", [(1, 1), (2, 1), (1, 2, 1), (3, 1, 2)])
def test_row_one_is_a_permutation(mu):
    for f in enumerate_fillings(mu):
        row1 = sorted(a for (i, j), a in f.labels if j == 1)
        assert row1 == list(range(1, len(mu) + 1))


def test_multiplicity_filter():
    fs = list(enumerate_fillings((2, 0), 3, {3: 1}))
    assert fs
    assert all(f.label_counts(3)[2] == 1 for f in fs)


@pytest.mark.parametrize("mu", SMALL)
def test_hhl_matches_oracle(mu):
    assert hhl_E(mu) == oracle_E(mu)


@pytest.mark.parametrize("mu", SMALL)
def test_leading_term_and_support(mu):
    E = hhl_E(mu)
    assert E.coefficient(mu) == ONE
    assert bruhat_support_ok(mu, E)


def test_E1():
    assert hhl_E((1,)) == XPoly.monomial((1,))
    assert stable_E((1,)) == stable_E((1, 0, 0))


def test_gamma_factor_cases():
    f = Filling((1, 1), (((1, 1), 1), ((2, 1), 2)))
    assert gamma_factor(f) == ONE and gamma_factor(f, limit=True) == ONE
    g = Filling((2, 0), (((1, 1), 1), ((1, 2), 2)))
    u = (1, 2)
    finite = omt / (1 - QtScalar.monomial(-(leg(g.mu, u) + 1), arm(g.mu, u) + 1))
    assert gamma_factor(g) == finite
    h = Filling((1, 0), (((1, 1), 2),))
    assert gamma_factor(h, limit=True) == omt


def test_stable_E_examples():
    c = qt("(1 - t)/(q - t)")
    assert stable_E((2, 0)).terms == {((2,), ()): ONE, ((1,), (1,)): c}
    assert stable_E((2,)) == stable_E((2, 0))


@pytest.mark.parametrize("mu", [(1,), (2, 0, 1), (0, 1)])
def test_trailing_zeros_do_not_matter(mu):
    assert stable_E(mu) == stable_E(mu + (0, 0))


def test_convergence():
    assert convergence_witness((1,), 3)["valuations"] == [float("inf")] * 4
    vals = convergence_witness((0, 2), 3)["valuations"]
    assert all(a < b for a, b in zip(vals[1:], vals[2:]))
    assert vals[0] >= 1
    assert convergence_witness((2, 0), 0)["valuations"][0] >= 1


def test_dump_line():
    (f,) = enumerate_fillings((1,), 1)
    assert f.dump() == "(1,1):1 | maj=0 coinv=0 gamma=1"
