import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemac.combinat import partitions
from stablemac.qt import ONE, qt
from stablemac.symfunc import (ONE_MINUS_T_X, X, Z_INV, Alphabet, SymFunc, expand_in_HLP,
                               hall_littlewood_P, hlp_triangularity, jing_B, parse_symfunc,
                               plethysm, plethystic_exp, split_alphabet, split_m)

omt = qt("1 - t")


def m(terms):
    return SymFunc("m", terms)


P2 = m({(2,): omt, (1, 1): omt**2})


def test_p_to_m():
    assert SymFunc("p", {(1, 1): ONE}).to("m") == m({(2,): 1, (1, 1): 2})
    assert SymFunc("h", {(1,): ONE}) == SymFunc("p", {(1,): ONE})


@pytest.mark.parametrize("basis", ["p", "h", "e"])
def test_basis_roundtrip(basis):
    for d in range(5):
        for lam in partitions(d):
            f = SymFunc.basis_element("m", lam)
            assert f.to(basis).to("m") == f


def test_e_and_h_products():
    assert SymFunc.basis_element("h", (2,)).to("m") == m({(2,): 1, (1, 1): 1})
    assert SymFunc.basis_element("e", (2,)).to("m") == m({(1, 1): 1})


def test_plethysm_rules():
    p2 = SymFunc("p", {(2,): ONE})
    assert plethysm(p2, ONE_MINUS_T_X) == p2.scale(1 - qt("t^2"))
    shifted = plethysm(SymFunc("p", {(1,): ONE}), X - Z_INV)
    assert shifted == {0: SymFunc("p", {(1,): ONE}), -1: SymFunc("p", {(): -ONE})}
    assert plethysm(SymFunc.basis_element("h", (2,)), ONE_MINUS_T_X) == P2


def test_plethystic_exp():
    e = plethystic_exp(ONE_MINUS_T_X, 2)
    assert e[0] == SymFunc.one() and e[1] == SymFunc("p", {(1,): omt})
    assert e[2] == P2
    assert plethystic_exp(Alphabet(), 3) == {0: SymFunc.one("p")}


def test_jing_small():
    assert jing_B(2, SymFunc.one()) == P2
    assert jing_B(0, SymFunc.one()) == SymFunc.one()
    p1 = SymFunc("p", {(1,): ONE})
    assert jing_B(1, p1) == m({(1, 1): omt * (1 + qt("t"))})


def test_hall_littlewood():
    assert hall_littlewood_P((2,)) == P2
    assert hall_littlewood_P((1, 1)) == m({(1, 1): omt**2 * (1 + qt("t"))})
    assert hall_littlewood_P(()) == SymFunc.one()


@pytest.mark.parametrize("d", range(7))
def test_hlp_triangular(d):
    assert hlp_triangularity(d)


def test_hlp_expansion():
    assert expand_in_HLP(P2) == SymFunc("HLP", {(2,): ONE})
    f = SymFunc("HLP", {(1, 1): ONE, (2,): ONE})
    assert expand_in_HLP(f.to("m")) == f


def test_hlp_diagonal_nonzero():
    for lam in partitions(5):
        assert hall_littlewood_P(lam).coefficient(lam)


def test_split_m():
    assert sorted(split_m((1,), 1)) == sorted([((1,), ()), ((0,), (1,))])
    assert sorted(split_m((1, 1), 1)) == sorted([((1,), (1,)), ((0,), (1, 1))])
    assert sorted(split_m((2,), 2)) == sorted([((2, 0), ()), ((0, 2), ()), ((0, 0), (2,))])


def test_split_alphabet_consistent():
    f = P2
    parts = split_alphabet(f, 1)
    assert parts[((2,), ())] == omt
    assert parts[((1,), (1,))] == omt**2


def test_text_format():
    assert str(expand_in_HLP(P2 + hall_littlewood_P((1, 1)).scale(qt("1/(q - t)")))) == \
        "HLP: [2]: 1; [1,1]: 1/(q - t)"
    assert str(SymFunc.zero()) == "m: 0"
    g = parse_symfunc("m: [2]: 1 - t; [1,1]: (1 - t)^2")
    assert g == P2
    assert parse_symfunc(str(g)) == g


lam_st = st.sampled_from([lam for d in range(4) for lam in partitions(d)])
coef = st.sampled_from(["1", "-2", "q", "1 - t", "q/(1 - t)"])


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(lam_st, coef, max_size=3), st.dictionaries(lam_st, coef, max_size=3))
def test_product_commutes_and_matches_p(a, b):
    f = m({k: qt(v) for k, v in a.items()})
    g = m({k: qt(v) for k, v in b.items()})
    assert f * g == g * f
    assert (f * g).to("p") == f.to("p") * g.to("p")


def _restrict(f, n):
    from stablemac.symfunc import monomial_sym_poly
    from stablemac.xpoly import XPoly

    out = XPoly.zero(n)
    for lam, c in f.to("m").terms.items():
        for e in monomial_sym_poly(lam, n):
            out = out + XPoly.monomial(e, c)
    return out


def _t_int(m):
    # [m]_t! = prod (1 - t^j)/(1 - t)
    out = ONE
    for j in range(1, m + 1):
        out = out * (1 - qt("t") ** j) / omt
    return out


@pytest.mark.parametrize("lam", [lam for d in range(1, 5) for lam in partitions(d) if len(lam) <= 3])
def test_hall_littlewood_against_symmetrization(lam):
    # Delta * P_lam = sum_w sgn(w) w(x^lam prod_{i<j} (x_i - t x_j)) / v_lam(t)
    from itertools import permutations

    from stablemac.xpoly import XPoly

    n = 3
    t = qt("t")
    lam0 = tuple(lam) + (0,) * (n - len(lam))
    xs = [XPoly.variable(i, n) for i in range(1, n + 1)]
    kernel = XPoly.monomial(lam0)
    delta = XPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            kernel = kernel * (xs[i] - xs[j].scale(t))
            delta = delta * (xs[i] - xs[j])
    anti = XPoly.zero(n)
    for w in permutations(range(n)):
        sign = (-1) ** sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        image = XPoly(n, {tuple(e[w.index(k)] for k in range(n)): c for e, c in kernel.terms.items()})
        anti = anti + image.scale(sign)
    mult = {}
    for p in lam0:
        mult[p] = mult.get(p, 0) + 1
    v = ONE
    b = ONE
    for p, k in mult.items():
        v = v * _t_int(k)
        if p:
            b = b * _t_int(k) * omt**k
    P = _restrict(hall_littlewood_P(lam), n).scale(b.inverse())
    assert delta * P == anti.scale(v.inverse())
