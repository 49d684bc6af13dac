"""Double affine Hecke algebra of type GL_n on Laurent polynomials.

Cherednik operators are realized by the explicit word

    Y_i = t^{-(i-1)} T_{i-1} ... T_1 omega^{-1} T_{n-1}^{-1} ... T_i^{-1},

eigenvalues come from the classical ``beta`` count, and :func:`oracle_E`
recovers ``E_mu`` as the common eigenvector of all ``Y_i`` without using
any combinatorial formula.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import xpoly
from .combinat import compositions
from .linalg import Echelon
from .qt import ONE, ZERO, QtScalar, qt
from .xpoly import (
    XPoly,
    T_inv_on_monomial,
    T_on_monomial,
    demazure_T,
    demazure_T_inv,
    mul_X,
    omega_inv_on_monomial,
)

__all__ = [
    "demazure_T", "demazure_T_inv", "cherednik_Y", "cherednik_Y_inv",
    "beta", "weight_alpha", "weight_alpha_tilde", "oracle_E", "relation_check",
    "intertwiner_phi", "NotAnEigenvectorError",
]


class NotAnEigenvectorError(ArithmeticError):
    pass


def _apply_chain(pairs, chain):
    """Apply monomial operators in ``chain`` (first element acts first)."""
    cur = dict(pairs)
    for op in chain:
        nxt = {}
        for e, c in cur.items():
            for e2, c2 in op(e):
                v = nxt.get(e2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    nxt[e2] = v
                else:
                    nxt.pop(e2, None)
        cur = nxt
    return cur


def _Y_chain(i, n):
    chain = [lambda e, j=j: T_inv_on_monomial(j, e) for j in range(i, n)]
    chain.append(omega_inv_on_monomial)
    chain += [lambda e, j=j: T_on_monomial(j, e) for j in range(1, i)]
    return chain


@lru_cache(maxsize=1 << 16)
def Y_on_monomial(i: int, e: tuple) -> tuple:
    n = len(e)
    out = _apply_chain({e: ONE}, _Y_chain(i, n))
    scale = QtScalar.monomial(0, -(i - 1))
    return tuple((k, v * scale) for k, v in out.items())


@lru_cache(maxsize=1 << 16)
def Y_inv_on_monomial(i: int, e: tuple) -> tuple:
    # Y_i^{-1} = t^{i-1} T_i ... T_{n-1} omega T_1^{-1} ... T_{i-1}^{-1}
    n = len(e)
    chain = [lambda e, j=j: T_inv_on_monomial(j, e) for j in range(i - 1, 0, -1)]
    chain.append(xpoly.omega_on_monomial)
    chain += [lambda e, j=j: T_on_monomial(j, e) for j in range(n - 1, i - 1, -1)]
    out = _apply_chain({e: ONE}, chain)
    scale = QtScalar.monomial(0, i - 1)
    return tuple((k, v * scale) for k, v in out.items())


def cherednik_Y(i: int, f: XPoly) -> XPoly:
    if not 1 <= i <= f.nvars:
        raise ValueError(f"Y_{i} undefined on {f.nvars} variables")
    return f.map_monomials(lambda e: Y_on_monomial(i, e))


def cherednik_Y_inv(i: int, f: XPoly) -> XPoly:
    if not 1 <= i <= f.nvars:
        raise ValueError(f"Y_{i}^-1 undefined on {f.nvars} variables")
    return f.map_monomials(lambda e: Y_inv_on_monomial(i, e))


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def beta(mu, i: int) -> int:
    """``#{j <= i : mu_j <= mu_i} + #{j > i : mu_i > mu_j}`` (1-based ``i``)."""
    m = mu[i - 1]
    return (sum(1 for j in range(i) if mu[j] <= m)
            + sum(1 for j in range(i, len(mu)) if m > mu[j]))


def weight_alpha(mu, m: int = 0) -> list:
    """Eigenvalues of ``Y_1..Y_{n+m}`` on ``E_{mu * 0^m}``."""
    nu = tuple(mu) + (0,) * m
    return [QtScalar.monomial(nu[i - 1], 1 - beta(nu, i)) for i in range(1, len(nu) + 1)]


def weight_alpha_tilde(mu) -> list:
    """Limit weight: ``t^n alpha^{(0)}(i)`` where ``mu_i != 0``, zero elsewhere.

    Returned as a list over positions ``1..len(mu)``; every later
    coordinate is zero.
    """
    n = len(mu)
    out = []
    for i in range(1, n + 1):
        if mu[i - 1] == 0:
            out.append(ZERO)
        else:
            out.append(QtScalar.monomial(mu[i - 1], n + 1 - beta(mu, i)))
    return out


# ---------------------------------------------------------------------------
# eigen-oracle
# ---------------------------------------------------------------------------

def oracle_E(mu) -> XPoly:
    """``E_mu`` as the normalized common kernel of ``Y_i - alpha_mu(i)``.

    The whole homogeneous component of degree ``|mu|`` in ``len(mu)``
    variables is used; no ordering of monomials is assumed.
    """
    mu = tuple(mu)
    n, d = len(mu), sum(mu)
    if n == 0:
        return XPoly(0, {(): ONE})
    basis = list(compositions(d, n))
    alpha = weight_alpha(mu)
    ech = Echelon()
    for i in range(1, n + 1):
        # columns: basis monomials; one row per output monomial
        rows = {}
        for nu in basis:
            img = dict(Y_on_monomial(i, nu))
            img[nu] = img.get(nu, ZERO) - alpha[i - 1]
            for out, c in img.items():
                if c:
                    rows.setdefault(out, {})[nu] = c
        for out, r in rows.items():
            ech.add_row(r, prefer=out)
    ker = ech.kernel(basis)
    if len(ker) != 1:
        raise NotAnEigenvectorError(
            f"common eigenspace for {mu} has dimension {len(ker)}, expected 1")
    vec = ker[0]
    lead = vec.get(mu)
    if not lead:
        raise NotAnEigenvectorError(f"eigenvector for {mu} has no x^mu term")
    inv = lead.inverse()
    return XPoly(n, {k: v * inv for k, v in vec.items()})


# ---------------------------------------------------------------------------
# relation checker
# ---------------------------------------------------------------------------

@dataclass
class RelationReport:
    relation: str
    n: int
    box: tuple
    status: str
    checked: int = 0
    counterexample: dict | None = None

    def as_dict(self):
        d = {"relation": self.relation, "n": self.n, "box": list(self.box),
             "status": self.status, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class Rep:
    """Operators of the standard representation on ``n`` variables.

    The ``T`` action can be swapped out, which is how the negative
    control (a perturbed Demazure-Lusztig operator) is produced.
    """

    n: int
    T_mono: object = T_on_monomial
    T_inv_mono: object = T_inv_on_monomial
    _cache: dict = field(default_factory=dict)

    def T(self, i, f):
        return f.map_monomials(lambda e: self.T_mono(i, e))

    def Tinv(self, i, f):
        return f.map_monomials(lambda e: self.T_inv_mono(i, e))

    def X(self, i, f):
        return mul_X(i, f)

    def Xinv(self, i, f):
        return mul_X(i, f, -1)

    def Y(self, i, f):
        return f.map_monomials(lambda e: self._Y_mono(i, e))

    def _Y_mono(self, i, e):
        key = (i, e)
        hit = self._cache.get(key)
        if hit is None:
            chain = [lambda e, j=j: self.T_inv_mono(j, e) for j in range(i, self.n)]
            chain.append(omega_inv_on_monomial)
            chain += [lambda e, j=j: self.T_mono(j, e) for j in range(1, i)]
            out = _apply_chain({e: ONE}, chain)
            scale = QtScalar.monomial(0, -(i - 1))
            hit = tuple((k, v * scale) for k, v in out.items())
            self._cache[key] = hit
        return hit


def _relations(n):
    """Yield ``(family, label, lhs, rhs)`` with ``lhs``/``rhs`` callables on XPoly."""
    t = qt("t")
    t_inv = QtScalar.monomial(0, -1)
    q = qt("q")

    def rel(rep):
        T, Ti, X, Y = rep.T, rep.Tinv, rep.X, rep.Y
        for i in range(1, n):
            yield ("(i) quadratic", f"(T{i}-1)(T{i}+t)=0",
                   lambda f, i=i: T(i, T(i, f)) - T(i, f).scale(1 - t) - f.scale(t),
                   lambda f: XPoly(f.nvars))
        for i in range(1, n - 1):
            yield ("(i) braid", f"T{i}T{i+1}T{i}=T{i+1}T{i}T{i+1}",
                   lambda f, i=i: T(i, T(i + 1, T(i, f))),
                   lambda f, i=i: T(i + 1, T(i, T(i + 1, f))))
        for i in range(1, n):
            for j in range(i + 2, n):
                yield ("(i) far commutation", f"T{i}T{j}=T{j}T{i}",
                       lambda f, i=i, j=j: T(i, T(j, f)),
                       lambda f, i=i, j=j: T(j, T(i, f)))
        for i in range(1, n):
            yield ("(ii) T^-1 X T^-1", f"T{i}^-1 X{i} T{i}^-1 = t^-1 X{i+1}",
                   lambda f, i=i: Ti(i, X(i, Ti(i, f))),
                   lambda f, i=i: X(i + 1, f).scale(t_inv))
        for i in range(1, n):
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    yield ("(ii) T X commutation", f"T{i}X{j}=X{j}T{i}",
                           lambda f, i=i, j=j: T(i, X(j, f)),
                           lambda f, i=i, j=j: X(j, T(i, f)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield ("(ii) X commutation", f"X{i}X{j}=X{j}X{i}",
                       lambda f, i=i, j=j: X(i, X(j, f)),
                       lambda f, i=i, j=j: X(j, X(i, f)))
        for i in range(1, n):
            yield ("(iii) T Y T", f"T{i}Y{i}T{i}=tY{i+1}",
                   lambda f, i=i: T(i, Y(i, T(i, f))),
                   lambda f, i=i: Y(i + 1, f).scale(t))
        for i in range(1, n):
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    yield ("(iii) T Y commutation", f"T{i}Y{j}=Y{j}T{i}",
                           lambda f, i=i, j=j: T(i, Y(j, f)),
                           lambda f, i=i, j=j: Y(j, T(i, f)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield ("(iii) Y commutation", f"Y{i}Y{j}=Y{j}Y{i}",
                       lambda f, i=i, j=j: Y(i, Y(j, f)),
                       lambda f, i=i, j=j: Y(j, Y(i, f)))
        if n >= 2:
            yield ("(iv)", "Y1T1X1=X2Y1T1",
                   lambda f: Y(1, T(1, X(1, f))),
                   lambda f: X(2, Y(1, T(1, f))))

        def xall(f):
            for k in range(1, n + 1):
                f = X(k, f)
            return f

        yield ("(v)", "Y1X1...Xn=qX1...XnY1",
               lambda f: Y(1, xall(f)),
               lambda f: xall(Y(1, f)).scale(q))

    return rel


RELATION_FAMILIES = (
    "(i) quadratic", "(i) braid", "(i) far commutation",
    "(ii) T^-1 X T^-1", "(ii) T X commutation", "(ii) X commutation",
    "(iii) T Y T", "(iii) T Y commutation", "(iii) Y commutation",
    "(iv)", "(v)",
)


def relation_check(n: int, box=(-2, 3), families=None, rep: Rep | None = None) -> list:
    """Check the defining relations on every Laurent monomial in ``box^n``.

    Returns one :class:`RelationReport` per relation family; failures carry
    the first counterexample monomial.
    """
    lo, hi = box
    unknown = set(families or ()) - set(RELATION_FAMILIES)
    if unknown:
        raise ValueError(f"unknown relation families: {sorted(unknown)}")
    rep = rep or Rep(n)
    monos = list(product(range(lo, hi + 1), repeat=n))
    reports = {}
    for family, label, lhs, rhs in _relations(n)(rep):
        if families is not None and family not in families:
            continue
        rpt = reports.setdefault(family, RelationReport(family, n, (lo, hi), "pass"))
        if rpt.status == "fail":
            continue
        for e in monos:
            f = XPoly(n, {e: ONE})
            a, b = lhs(f), rhs(f)
            rpt.checked += 1
            if a != b:
                rpt.status = "fail"
                rpt.counterexample = {"instance": label, "monomial": list(e),
                                      "lhs": str(a), "rhs": str(b)}
                break
    return list(reports.values())


def relation_report_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2)


def perturbed_rep(n: int) -> Rep:
    """``T_i`` with the ``(1 - t)`` divided-difference term dropped."""

    def T_bad(i, e):
        return ((e[:i - 1] + (e[i], e[i - 1]) + e[i + 1:], ONE),)

    t_inv = QtScalar.monomial(0, -1)
    omt = qt("1 - t")

    def T_bad_inv(i, e):
        # keep the algebraic form t^{-1}(T - 1 + t) so only T itself changes
        out = [(e2, c * t_inv) for e2, c in T_bad(i, e)]
        out.append((e, -omt * t_inv))
        return tuple(out)

    return Rep(n, T_bad, T_bad_inv)


# ---------------------------------------------------------------------------
# intertwiners (finite rank)
# ---------------------------------------------------------------------------

def intertwiner_phi(i: int, f: XPoly, check: bool = True) -> XPoly:
    """``phi_i = T_i Y_i - Y_i T_i``; optionally cross-checked against
    ``T_i (Y_i - Y_{i+1}) + (1 - t) Y_{i+1}``."""
    a = demazure_T(i, cherednik_Y(i, f)) - cherednik_Y(i, demazure_T(i, f))
    if check:
        y1 = cherednik_Y(i + 1, f)
        b = demazure_T(i, cherednik_Y(i, f) - y1) + y1.scale(qt("1 - t"))
        if a != b:
            raise ArithmeticError(f"intertwiner forms disagree for i={i}")
    return a
