"""Limit Cherednik operators and the stable-limit weight basis.

The limit operator ``Y1`` is computed exactly.  Write
``t^n rho Y_1^{(n)} = t * omega^{-1} * P_n * S_{n-1} ... S_1`` with
``S_i = T_i - 1 + t`` and ``P_n`` keeping the terms divisible by ``x_n``.
Start from ``x^a F[x_{k+1} + ...]``.  After ``S_1 .. S_{k-1}`` (finite
variables only) and ``S_k .. S_i`` the polynomial is symmetric in the block
``B = x_k..x_i`` and in ``C = x_{i+2}..x_n``, with ``x_{i+1}`` singled out.
So every step acts on states ``(rho, u, sigma)`` meaning
``m_rho[B] x_{i+1}^u m_sigma[C]`` through one fixed matrix ``M``, except for
the few steps where ``B`` or ``C`` is too short (those only kill states).
As ``n`` grows the middle of the product is ``M^N``, and ``M^N`` converges
t-adically to the spectral projector of ``M`` at eigenvalue 1 provided
that eigenvalue is semisimple and every other eigenvalue is divisible by
``t``.  Both conditions are checked exactly; failure raises
:class:`NonConvergenceError`.  Finite-``n`` values of the same product are
also available and agree with brute-force truncation (see the tests).
"""

from __future__ import annotations

from functools import lru_cache

import flint

from . import almostsym as asym
from .almostsym import AlmostSym, act_T, act_T_inv, raise_split, rho
from .combinat import compositions, concat, partitions, sort_composition
from .daha import cherednik_Y, weight_alpha_tilde
from .hhl import stable_E
from .linalg import Echelon
from .qt import ONE, ZERO, QtScalar, T, qt
from .symfunc import SymFunc, expand_in_HLP, jing_B
from .xpoly import T_on_monomial

_TM1 = T - 1
_T_INV = T.inverse()


class NonConvergenceError(ArithmeticError):
    pass


class ProportionalityError(ArithmeticError):
    pass


def _acc(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _remove_part(sigma, j):
    s = list(sigma)
    s.remove(j)
    return tuple(s)


# ---------------------------------------------------------------------------
# the transfer step
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _step(state) -> tuple:
    """Generic step on ``(rho, u, sigma)``; returns ``((state', c), ...)``."""
    rho_, u, sigma = state
    out = {}
    for j in sorted(set(sigma)) + [0]:
        rest = _remove_part(sigma, j) if j else sigma
        images = dict(T_on_monomial(1, (u, j)))
        _acc(images, (u, j), _TM1)
        for (u2, j2), c in images.items():
            # x^{u2} m_rho[B0] is the representative of m_{rho'}[B0 + x] only
            # when u2 is the largest part; other terms follow by symmetry
            if u2 == 0:
                if rho_:
                    continue
                new_rho = ()
            else:
                if rho_ and u2 < rho_[0]:
                    continue
                new_rho = (u2,) + rho_
            _acc(out, (new_rho, j2, rest), c)
    return tuple(out.items())


def _apply_step(vec: dict, b_after=None, c_after=None) -> dict:
    out = {}
    for state, c in vec.items():
        for (r2, u2, s2), v in _step(state):
            if b_after is not None and len(r2) > b_after:
                continue
            if c_after is not None and len(s2) > c_after:
                continue
            _acc(out, (r2, u2, s2), c * v)
    return out


def block_states(d: int) -> list:
    out = []
    for u in range(d + 1):
        for rd in range(d - u + 1):
            for r in partitions(rd):
                for s in partitions(d - u - rd):
                    out.append((r, u, s))
    return out


def transfer_matrix(d: int) -> dict:
    """Columns of the generic step on degree-``d`` states."""
    return {s: dict(_step(s)) for s in block_states(d)}


def _const_term(c: QtScalar) -> int:
    if not c.is_polynomial():
        raise NonConvergenceError("transfer matrix entry is not a polynomial")
    return int(c.num.to_dict().get((0, 0), 0))


@lru_cache(maxsize=None)
def limit_projector(d: int):
    """``lim_N M^N`` on degree-``d`` states, as ``{column: {row: c}}``.

    Raises :class:`NonConvergenceError` unless eigenvalue 1 is semisimple
    and the rest of the spectrum has positive t-adic valuation.
    """
    states = block_states(d)
    M = transfer_matrix(d)
    # rows of A = M - I and of its transpose
    rows = {s: {} for s in states}
    cols = {s: {} for s in states}
    for col, entries in M.items():
        for row, v in entries.items():
            rows[row][col] = v
            cols[col][row] = v
    for s in states:
        _acc(rows[s], s, -ONE)
        _acc(cols[s], s, -ONE)
    er, ec = Echelon(), Echelon()
    for s in states:
        er.add_row(rows[s])
        ec.add_row(cols[s])
    K = er.kernel(states)
    L = ec.kernel(states)
    r = len(K)

    # spectrum check at t = 0
    idx = {s: i for i, s in enumerate(states)}
    m0 = [[0] * len(states) for _ in states]
    for col, entries in M.items():
        for row, v in entries.items():
            m0[idx[row]][idx[col]] = _const_term(v)
    cp = flint.fmpz_mat(m0).charpoly() if states else flint.fmpz_poly([1])
    x = flint.fmpz_poly([0, 1])
    expected = (x - 1) ** r * x ** (len(states) - r)
    if cp != expected or len(L) != r:
        raise NonConvergenceError(
            f"degree {d}: transfer matrix has char poly {cp} mod t with "
            f"{r}-dimensional fixed space; the limit does not exist")

    # P = K (L^T K)^{-1} L^T
    G = [[sum((l.get(s, ZERO) * kv for s, kv in k.items()), ZERO) for k in K] for l in L]
    Ginv = _invert_small(G)
    P = {}
    for s in states:
        # column s of L^T is (l_i[s])_i
        lcol = [l.get(s, ZERO) for l in L]
        if not any(lcol):
            continue
        coeffs = [sum((Ginv[i][j] * lcol[j] for j in range(r)), ZERO) for i in range(r)]
        col = {}
        for i, k in enumerate(K):
            if coeffs[i]:
                for s2, v in k.items():
                    _acc(col, s2, coeffs[i] * v)
        if col:
            P[s] = col
    return P


def _invert_small(G):
    r = len(G)
    a = [list(row) + [ONE if i == j else ZERO for j in range(r)] for i, row in enumerate(G)]
    for c in range(r):
        piv = next((i for i in range(c, r) if a[i][c]), None)
        if piv is None:
            raise NonConvergenceError("eigenvalue 1 of the transfer matrix is not semisimple")
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c].inverse()
        a[c] = [v * inv for v in a[c]]
        for i in range(r):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[r:] for row in a]


def _apply_projector(vec: dict) -> dict:
    out = {}
    for state, c in vec.items():
        d = len(state) and sum(state[0]) + state[1] + sum(state[2])
        for s2, v in limit_projector(d).get(state, {}).items():
            _acc(out, s2, c * v)
    return out


# ---------------------------------------------------------------------------
# Y1 on basis elements
# ---------------------------------------------------------------------------

def _initial(a: tuple, sigma: tuple) -> dict:
    """``S_{k-1} .. S_1 x^a`` split into inert part and block state."""
    k = len(a)
    vec = {a: ONE}
    for j in range(1, k):
        nxt = {}
        for e, c in vec.items():
            for e2, v in T_on_monomial(j, e):
                _acc(nxt, e2, c * v)
            _acc(nxt, e, c * _TM1)
        vec = nxt
    out = {}
    for e, c in vec.items():
        out.setdefault(e[:-1], {})[((), e[-1], sigma)] = c
    return out


def _readout(groups: dict, k: int) -> AlmostSym:
    terms = {}
    for e, vec in groups.items():
        for (r, u, s), c in vec.items():
            if u == 0:
                continue
            assert not s
            _acc(terms, ((u,) + e, r), c * T * QtScalar.monomial(u, 0))
    return AlmostSym._raw(k, terms)


def Y1_truncated_block(a: tuple, sigma: tuple, n: int) -> AlmostSym:
    """``t^n rho Y_1^{(n)}`` applied to ``x^a m_sigma[x_{k+1}..x_n]``."""
    k = len(a)
    if k < 1 or n <= k:
        raise ValueError("need split >= 1 and n > split")
    groups = _initial(a, sigma)
    if len(sigma) > n - k:
        return AlmostSym.zero(k)
    for i in range(k, n):
        b_after, c_after = i - k + 1, n - i - 1
        groups = {e: _apply_step(v, b_after, c_after) for e, v in groups.items()}
    return _readout(groups, k)


@lru_cache(maxsize=None)
def _Y1_basis(a: tuple, sigma: tuple) -> AlmostSym:
    k = len(a)
    groups = _initial(a, sigma)
    D = max(1, sum(a) + sum(sigma))
    for b_after in range(1, D):
        groups = {e: _apply_step(v, b_after, None) for e, v in groups.items()}
    groups = {e: _apply_projector(v) for e, v in groups.items()}
    for c_after in range(D - 1, -1, -1):
        groups = {e: _apply_step(v, None, c_after) for e, v in groups.items()}
    return _readout(groups, k)


def _prepare(f: AlmostSym) -> AlmostSym:
    return raise_split(f, max(f.split, 1))


def limit_Y1(f: AlmostSym, n0: int | None = None, n_max: int | None = None) -> AlmostSym:
    """The limit operator ``Y1`` on ``f``.

    ``n0..n_max`` are the truncation levels at which the finite values
    ``t^n rho Y_1^{(n)} pi_n f`` are computed to confirm that their distance
    to the limit shrinks t-adically.
    """
    f = _prepare(f)
    out = AlmostSym.zero(f.split)
    for (a, sigma), c in f.terms.items():
        out = out + _Y1_basis(a, sigma).scale(c)
    if n0 is None:
        n0 = f.split + f.degree() + 1
    if n_max is None:
        n_max = n0 + 2
    if n_max >= n0:
        vals = truncation_valuations(f, out, range(n0, n_max + 1))
        if any(x > y for x, y in zip(vals, vals[1:])):
            raise NonConvergenceError(f"truncations do not approach the limit: {vals}")
    return out.lowered()


def truncated_Y1(f: AlmostSym, n: int) -> AlmostSym:
    """Finite value ``t^n rho Y_1^{(n)} pi_n f`` in almost-symmetric form."""
    f = _prepare(f)
    out = AlmostSym.zero(f.split)
    for (a, sigma), c in f.terms.items():
        out = out + Y1_truncated_block(a, sigma, n).scale(c)
    return out


def truncation_valuations(f: AlmostSym, limit: AlmostSym, ns) -> list:
    vals = []
    for n in ns:
        diff = truncated_Y1(f, n) - limit
        vals.append(min((c.t_valuation() for c in diff.terms.values()), default=float("inf")))
    return vals


def brute_force_Y1(f: AlmostSym, n: int):
    """``t^n rho Y_1^{(n)} pi_n f`` as a polynomial, straight from the DAHA action."""
    from .xpoly import XPoly

    p = asym.project_pi(f, n)
    y = cherednik_Y(1, p)
    kept = {e: c * T ** n for e, c in y.terms.items() if e[0] > 0}
    return XPoly._raw(n, kept)


# ---------------------------------------------------------------------------
# higher Y, intertwiners
# ---------------------------------------------------------------------------

def limit_Y(i: int, f: AlmostSym, **kw) -> AlmostSym:
    """``Y_{i+1} = t^{-1} T_i Y_i T_i``."""
    if i < 1:
        raise ValueError("Y_i needs i >= 1")
    g = f
    for j in range(i - 1, 0, -1):
        g = act_T(j, g)
    g = limit_Y1(g, **kw)
    for j in range(1, i):
        g = act_T(j, g)
    if i > 1:
        g = g.scale(_T_INV ** (i - 1))
    return g.lowered()


def rho_formula_path(r: int, mu) -> AlmostSym:
    """``alpha~_mu(r) T_{r-1}..T_1 rho T_1^{-1}..T_{r-1}^{-1} E~_mu``."""
    mu = tuple(mu)
    alpha = weight_alpha_tilde(mu)
    a = alpha[r - 1] if r <= len(mu) else ZERO
    if not a:
        return AlmostSym.zero()
    g = stable_E(mu)
    for j in range(r - 1, 0, -1):
        g = act_T_inv(j, g)
    g = rho(g)
    for j in range(1, r):
        g = act_T(j, g)
    return g.scale(a).lowered()


def limit_intertwiner(i: int, f: AlmostSym, check: bool = True) -> AlmostSym:
    """``phi_i = T_i Y_i - Y_i T_i``, compared against
    ``T_i (Y_i - Y_{i+1}) + (1 - t) Y_{i+1}``."""
    yi = limit_Y(i, f)
    a = act_T(i, yi) - limit_Y(i, act_T(i, f))
    if check:
        yi1 = limit_Y(i + 1, f)
        b = act_T(i, yi - yi1) + yi1.scale(1 - T)
        if a != b:
            raise ArithmeticError(f"the two forms of phi_{i} disagree")
    return a.lowered()


# ---------------------------------------------------------------------------
# lowering operators and symmetrization
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _jing_m(n: int, lam: tuple) -> tuple:
    return tuple(jing_B(n, SymFunc("m", {lam: ONE})).terms.items())


def partial_minus(k: int, f: AlmostSym) -> AlmostSym:
    """``x^{a'} x_k^n F[x_{k+1}+..] -> x^{a'} B_n(F)[x_k + ..]``."""
    if k < 1:
        raise ValueError("lowering index must be >= 1")
    if f.split > k:
        raise ValueError(f"element of split {f.split} is not in P({k})+")
    f = raise_split(f, k)
    out = {}
    for (a, lam), c in f.terms.items():
        for nu, v in _jing_m(a[-1], lam):
            _acc(out, (a[:-1], nu), c * v)
    return AlmostSym._raw(k - 1, out)


def sigma_tilde(f: AlmostSym) -> SymFunc:
    g = f
    for k in range(f.split, 0, -1):
        g = partial_minus(k, g)
    return SymFunc("m", {lam: c for (_, lam), c in g.terms.items()})


@lru_cache(maxsize=None)
def A_function(lam) -> SymFunc:
    return sigma_tilde(stable_E(tuple(lam)))


@lru_cache(maxsize=None)
def A_in_HLP(lam) -> SymFunc:
    return expand_in_HLP(A_function(tuple(lam)))


def gamma_mu(mu) -> QtScalar:
    """Scalar with ``sigma~(E~_mu) = gamma_mu A_{sort(mu)}``."""
    mu = tuple(mu)
    s = sigma_tilde(stable_E(mu)).to("m")
    A = A_function(sort_composition(mu)).to("m")
    if not A.terms:
        raise ProportionalityError("A function vanished")
    lead = next(iter(A.terms))
    g = s.coefficient(lead) / A.terms[lead]
    if s != A.scale(g):
        raise ProportionalityError(f"sigma~(E~_{mu}) is not a multiple of A_{sort_composition(mu)}")
    return g


# ---------------------------------------------------------------------------
# pairs (mu | lam)
# ---------------------------------------------------------------------------

def is_admissible(mu, lam=()) -> bool:
    return len(mu) == 0 or mu[-1] != 0


@lru_cache(maxsize=None)
def _pair_cached(mu: tuple, lam: tuple) -> AlmostSym:
    ml = concat(mu, lam)
    g = raise_split(stable_E(ml), len(ml)) if len(ml) >= stable_E(ml).split else stable_E(ml)
    for k in range(len(ml), len(mu), -1):
        g = partial_minus(k, g)
    return g.lowered()


def stable_E_pair(mu, lam) -> AlmostSym:
    return _pair_cached(tuple(mu), tuple(lam))


def pair_weight(mu, lam) -> list:
    """``(alpha~_{mu*lam}(1..l(mu)), 0, ...)``, listed up to ``l(mu*lam)``."""
    mu, lam = tuple(mu), tuple(lam)
    alpha = weight_alpha_tilde(concat(mu, lam))
    return [alpha[i] if i < len(mu) else ZERO for i in range(len(mu) + len(lam))]


def direct_pair_weight(mu, lam, r_max: int | None = None) -> list:
    """Apply ``Y_r`` to ``E~_(mu|lam)`` and read off the eigenvalue;
    raises if the element is not an eigenvector."""
    f = stable_E_pair(mu, lam)
    if r_max is None:
        r_max = len(mu) + len(lam)
    out = []
    for r in range(1, r_max + 1):
        g = limit_Y(r, f)
        out.append(_eigenvalue(f, g, f"Y_{r} on E~({mu}|{lam})"))
    return out


def _eigenvalue(f: AlmostSym, g: AlmostSym, what: str) -> QtScalar:
    if not g:
        return ZERO
    k = max(f.split, g.split)
    F, G = raise_split(f, k), raise_split(g, k)
    key = next(iter(F.terms))
    c = G.coefficient(*key) / F.terms[key]
    if F.scale(c).terms != G.terms:
        raise ArithmeticError(f"{what}: not an eigenvector")
    return c


# ---------------------------------------------------------------------------
# basis certificate
# ---------------------------------------------------------------------------

def admissible_pairs(k: int, d: int) -> list:
    out = []
    for ell in range(0, k + 1):
        for size in range(0, d + 1) if ell else [0]:
            for mu in (compositions(size, ell) if ell else [()]):
                if not is_admissible(mu):
                    continue
                for lam in partitions(d - size):
                    out.append((tuple(mu), lam))
    return out


def component_dim(k: int, d: int) -> int:
    return sum(len(list(compositions(s, k))) if k else int(s == 0)
               for s in range(d + 1) for _ in partitions(d - s))


def basis_certificate(k: int, d: int, with_sigma: bool = True) -> dict:
    pairs = admissible_pairs(k, d)
    dim = component_dim(k, d)
    ech = Echelon()
    for mu, lam in pairs:
        f = raise_split(stable_E_pair(mu, lam), k)
        ech.add_row({key: c for key, c in f.terms.items()})
    report = {"k": k, "d": d,
              "pairs": [_pair_str(mu, lam) for mu, lam in pairs],
              "count": len(pairs), "dim": dim, "rank": ech.rank}
    ok = len(pairs) == dim and ech.rank == dim
    if with_sigma:
        # symmetrization sends each basis element to a nonzero multiple of an A function
        bad = []
        for mu, lam in pairs:
            ml = concat(mu, lam)
            s = sigma_tilde(stable_E_pair(mu, lam))
            try:
                g = gamma_mu(ml)
            except ProportionalityError:
                bad.append(_pair_str(mu, lam))
                continue
            if not g or s != A_function(sort_composition(ml)).scale(g):
                bad.append(_pair_str(mu, lam))
        report["sigma_failures"] = bad
        ok = ok and not bad
    report["status"] = "pass" if ok else "fail"
    return report


def _pair_str(mu, lam) -> str:
    m = ",".join(map(str, mu)) or "∅"
    l = ",".join(map(str, lam)) or "∅"
    return f"({m}|{l})"


def tail_in_HLP(f: AlmostSym, split: int | None = None) -> dict:
    """Group by the finite monomial and expand each tail in the HLP basis."""
    f = f.lowered() if split is None else raise_split(f.lowered(), split)
    groups = {}
    for (a, lam), c in f.terms.items():
        groups.setdefault(a, {})[lam] = c
    return {a: expand_in_HLP(SymFunc("m", tails)) for a, tails in groups.items()}


def from_hlp_terms(split: int, terms: dict) -> AlmostSym:
    """``sum c x^a P_lam[x_{k+1} + ...]`` as an almost-symmetric function."""
    from .symfunc import hall_littlewood_P

    out = {}
    for (a, lam), c in terms.items():
        c = qt(c)
        for nu, v in hall_littlewood_P(tuple(lam)).terms.items():
            _acc(out, (tuple(a), nu), c * v)
    return AlmostSym._raw(split, out)


def _hlp_items(f: AlmostSym, split):
    groups = tail_in_HLP(f, split)
    k = f.lowered().split if split is None else split
    items = [((a, lam), c) for a, s in groups.items() for lam, c in s.terms.items()]
    items.sort(key=lambda kv: (-(sum(kv[0][0]) + sum(kv[0][1])),
                               tuple(-x for x in kv[0][0]), tuple(-p for p in kv[0][1])))
    return k, items


def hlp_text(f: AlmostSym, split: int | None = None) -> str:
    """Canonical text with tails in the HLP basis: ``split=k; [a] ⊗ P[lam]: c; ...``."""
    k, items = _hlp_items(f, split)
    if not items:
        return f"split={k}; 0"
    body = "; ".join(f"[{','.join(map(str, a))}] ⊗ P[{','.join(map(str, lam))}]: {c}"
                     for (a, lam), c in items)
    return f"split={k}; {body}"


def parse_hlp_text(text: str) -> AlmostSym:
    import re

    head, _, body = text.partition(";")
    m = re.match(r"^\s*split\s*=\s*(\d+)\s*$", head)
    if not m:
        raise ValueError(f"missing split header in {text!r}")
    k = int(m.group(1))
    terms = {}
    body = body.strip()
    if body and body != "0":
        for chunk in body.split(";"):
            mm = re.match(r"^\[([\d,\s]*)\]\s*⊗\s*P\[([\d,\s]*)\]\s*:\s*(.+)$", chunk.strip())
            if not mm:
                raise ValueError(f"malformed term {chunk!r}")
            a = tuple(int(x) for x in mm.group(1).split(",") if x.strip())
            lam = tuple(int(x) for x in mm.group(2).split(",") if x.strip())
            if len(a) != k:
                raise ValueError(f"exponent vector {a} does not match split {k}")
            terms[(a, lam)] = qt(mm.group(3))
    return from_hlp_terms(k, terms)


def pretty_hlp(f: AlmostSym, split: int | None = None) -> str:
    """e.g. ``x1 * P[1,1](x2+...)``."""
    from .xpoly import format_monomial

    k, items = _hlp_items(f, split)
    if not items:
        return "0"
    out = []
    for (a, lam), c in items:
        pieces = []
        if not c.is_one():
            pieces.append(f"({c})")
        mono = format_monomial(a)
        if mono:
            pieces.append(mono)
        if lam:
            pieces.append(f"P[{','.join(map(str, lam))}](x{k + 1}+...)")
        out.append(" * ".join(pieces) or "1")
    return " + ".join(out)
