"""Symmetric functions over Q(q, t).

Elements are stored in one of the bases ``m`` (monomial), ``p`` (power
sum), ``h`` (complete), ``e`` (elementary) or ``HLP`` (the Hall-Littlewood
family built from Jing operators).  The power-sum basis is the pivot:
products and plethysm are computed there.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .combinat import dominance_leq, partitions, z_lambda
from .linalg import SingularMatrixError
from .qt import ONE, ZERO, QtScalar, qt

BASES = ("m", "p", "h", "e", "HLP")


def _fr(c) -> QtScalar:
    return QtScalar(c) if isinstance(c, Fraction) else qt(c)


def _psort(parts) -> tuple:
    return tuple(sorted(parts, reverse=True))


class SymFunc:
    """A symmetric function: basis tag plus ``{partition: QtScalar}``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, c in (terms or {}).items():
            c = qt(c) if not isinstance(c, Fraction) else QtScalar(c)
            if c:
                lam = tuple(lam)
                if any(p <= 0 for p in lam) or list(lam) != sorted(lam, reverse=True):
                    raise ValueError(f"not a partition: {lam}")
                clean[lam] = clean[lam] + c if lam in clean else c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, basis, terms):
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, basis="m"):
        return cls._raw(basis, {(): ONE})

    @classmethod
    def zero(cls, basis="m"):
        return cls._raw(basis, {})

    @classmethod
    def basis_element(cls, basis, lam, coeff=ONE):
        return cls(basis, {tuple(lam): coeff})

    # -- queries ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {sum(lam) for lam in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc._raw(self.basis, {k: v for k, v in self.terms.items() if sum(k) == d})

    def coefficient(self, lam) -> QtScalar:
        return self.terms.get(tuple(lam), ZERO)

    def to(self, basis: str) -> "SymFunc":
        return convert_basis(self, basis)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return self.to("m").terms == other.to("m").terms

    def __hash__(self):
        return hash(frozenset(self.to("m").terms.items()))

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to(self.basis)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return SymFunc._raw(self.basis, out)

    def __neg__(self):
        return SymFunc._raw(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = _fr(c)
        if not c:
            return SymFunc._raw(self.basis, {})
        return SymFunc._raw(self.basis, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            a, b = self.to("p"), other.to("p")
            out = {}
            for k1, v1 in a.terms.items():
                for k2, v2 in b.terms.items():
                    k = _psort(k1 + k2)
                    w = out.get(k)
                    w = v1 * v2 if w is None else w + v1 * v2
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
            prod = SymFunc._raw("p", out)
            return prod if self.basis == "p" else prod.to(self.basis)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    # -- text -------------------------------------------------------------------
    def __str__(self):
        return format_symfunc(self)

    def __repr__(self):
        return f"SymFunc({format_symfunc(self)!r})"


def _part_key(lam):
    return (sum(lam), tuple(-p for p in lam))


def format_symfunc(f: SymFunc) -> str:
    if not f.terms:
        return f"{f.basis}: 0"
    items = sorted(f.terms.items(), key=lambda kv: _part_key(kv[0]))
    body = "; ".join(f"[{','.join(map(str, lam))}]: {c}" for lam, c in items)
    return f"{f.basis}: {body}"


_TERM = re.compile(r"^\[([\d,\s]*)\]\s*:\s*(.+)$")


def parse_symfunc(text: str) -> SymFunc:
    basis, _, body = text.partition(":")
    basis = basis.strip()
    body = body.strip()
    if basis not in BASES:
        raise ValueError(f"unknown basis in {text!r}")
    if body == "0":
        return SymFunc(basis)
    terms = {}
    for chunk in body.split(";"):
        m = _TERM.match(chunk.strip())
        if not m:
            raise ValueError(f"malformed term {chunk!r}")
        parts = tuple(int(x) for x in m.group(1).split(",") if x.strip())
        terms[parts] = qt(m.group(2))
    return SymFunc(basis, terms)


# ---------------------------------------------------------------------------
# classical transition matrices (rational, no q or t)
# ---------------------------------------------------------------------------

def _p_to_m_coeff(lam: tuple, mu: tuple) -> int:
    """Coefficient of ``m_mu`` in ``p_lam``: ways to drop the parts of ``lam``
    into the rows of ``mu`` filling each row exactly."""

    @lru_cache(maxsize=None)
    def count(idx, remaining):
        if idx == len(lam):
            return int(all(r == 0 for r in remaining))
        total = 0
        part = lam[idx]
        for j, r in enumerate(remaining):
            if r >= part:
                rem = list(remaining)
                rem[j] -= part
                total += count(idx + 1, tuple(rem))
        return total

    return count(0, tuple(mu))


@lru_cache(maxsize=None)
def _p_in_m(d: int) -> dict:
    """``{lam: {mu: int}}`` with ``p_lam = sum_mu c m_mu``."""
    out = {}
    for lam in partitions(d):
        row = {}
        for mu in partitions(d):
            c = _p_to_m_coeff(lam, mu)
            if c:
                row[mu] = c
        out[lam] = row
    return out


def _invert(mat: dict, keys) -> dict:
    """Invert ``{row: {col: Fraction}}`` (square, keyed by ``keys``)."""
    keys = list(keys)
    n = len(keys)
    idx = {k: i for i, k in enumerate(keys)}
    a = [[Fraction(0)] * n + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for r, row in mat.items():
        for c, v in row.items():
            a[idx[r]][idx[c]] = Fraction(v)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("transition matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = {}
    for i, k in enumerate(keys):
        out[k] = {keys[j]: a[i][n + j] for j in range(n) if a[i][n + j] != 0}
    return out


@lru_cache(maxsize=None)
def _m_in_p(d: int) -> dict:
    return _invert(_p_in_m(d), partitions(d))


def _hn_in_p(n: int, sign: bool) -> dict:
    out = {}
    for rho in partitions(n):
        c = Fraction(1, z_lambda(rho))
        if sign and (n - len(rho)) % 2:
            c = -c
        out[rho] = c
    return out


def _mult_p_rational(parts_rows):
    acc = {(): Fraction(1)}
    for row in parts_rows:
        nxt = {}
        for k1, v1 in acc.items():
            for k2, v2 in row.items():
                k = _psort(k1 + k2)
                nxt[k] = nxt.get(k, 0) + v1 * v2
        acc = {k: v for k, v in nxt.items() if v}
    return acc


@lru_cache(maxsize=None)
def _h_in_p(d: int) -> dict:
    return {lam: _mult_p_rational([_hn_in_p(k, False) for k in lam]) for lam in partitions(d)}


@lru_cache(maxsize=None)
def _e_in_p(d: int) -> dict:
    return {lam: _mult_p_rational([_hn_in_p(k, True) for k in lam]) for lam in partitions(d)}


@lru_cache(maxsize=None)
def _p_in_h(d: int) -> dict:
    return _invert(_h_in_p(d), partitions(d))


@lru_cache(maxsize=None)
def _p_in_e(d: int) -> dict:
    return _invert(_e_in_p(d), partitions(d))


_TO_P = {"m": _m_in_p, "h": _h_in_p, "e": _e_in_p}
_FROM_P = {"m": _p_in_m, "h": _p_in_h, "e": _p_in_e}

# cache of Fraction -> QtScalar conversions for matrix entries
_frac_cache: dict = {}


def _qf(c: Fraction) -> QtScalar:
    v = _frac_cache.get(c)
    if v is None:
        v = _frac_cache[c] = QtScalar(c)
    return v


def _apply_matrix(f: SymFunc, table, basis: str) -> SymFunc:
    out = {}
    for lam, c in f.terms.items():
        for mu, a in table(sum(lam))[lam].items():
            v = c * _qf(Fraction(a))
            w = out.get(mu)
            w = v if w is None else w + v
            if w:
                out[mu] = w
            else:
                out.pop(mu, None)
    return SymFunc._raw(basis, out)


def convert_basis(f: SymFunc, target: str) -> SymFunc:
    """Express ``f`` in ``target``; the round trip is the identity."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.basis == "HLP":
        return convert_basis(_hlp_to_m(f), target)
    if target == "HLP":
        return expand_in_HLP(f)
    pf = f if f.basis == "p" else _apply_matrix(f, _TO_P[f.basis], "p")
    if target == "p":
        return pf
    return _apply_matrix(pf, _FROM_P[target], target)


# ---------------------------------------------------------------------------
# plethysm
# ---------------------------------------------------------------------------

class Alphabet:
    """Finite integer combination of monomials ``q^a t^b z^c`` and ``q^a t^b z^c X``.

    ``X`` stands for the infinite alphabet ``x_1 + x_2 + ...``.  Keys are
    ``(a, b, c, x)`` with ``x`` in ``{0, 1}``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def coerce(cls, v):
        if isinstance(v, Alphabet):
            return v
        if isinstance(v, int):
            return cls({(0, 0, 0, 0): v})
        raise TypeError(f"cannot use {v!r} in an alphabet")

    def __add__(self, other):
        other = Alphabet.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Alphabet(out)

    __radd__ = __add__

    def __neg__(self):
        return Alphabet({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Alphabet.coerce(other))

    def __rsub__(self, other):
        return Alphabet.coerce(other) + (-self)

    def __mul__(self, other):
        other = Alphabet.coerce(other)
        out = {}
        for (a1, b1, c1, x1), v1 in self.terms.items():
            for (a2, b2, c2, x2), v2 in other.terms.items():
                if x1 + x2 > 1:
                    raise ValueError("alphabet may contain X at most linearly")
                k = (a1 + a2, b1 + b2, c1 + c2, x1 + x2)
                out[k] = out.get(k, 0) + v1 * v2
        return Alphabet(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if len(self.terms) != 1:
            raise ValueError("only monomials can be raised to powers")
        ((a, b, c, x), v), = self.terms.items()
        if x or v != 1:
            raise ValueError("only q, t, z monomials can be raised to powers")
        return Alphabet({(a * k, b * k, c * k, 0): 1})

    def power_sum(self, k: int) -> dict:
        """``p_k[A]`` as ``{z_exponent: {(): c, (k,): c'}}``."""
        out = {}
        for (a, b, c, x), v in self.terms.items():
            slot = out.setdefault(c * k, {})
            key = (k,) if x else ()
            slot[key] = slot.get(key, ZERO) + QtScalar.monomial(a * k, b * k, v)
        return {z: {kk: vv for kk, vv in s.items() if vv} for z, s in out.items()}

    def __repr__(self):
        return f"Alphabet({self.terms})"


X = Alphabet({(0, 0, 0, 1): 1})
Z = Alphabet({(0, 0, 1, 0): 1})
Z_INV = Alphabet({(0, 0, -1, 0): 1})
QA = Alphabet({(1, 0, 0, 0): 1})
TA = Alphabet({(0, 1, 0, 0): 1})


def _zmul(a: dict, b: dict) -> dict:
    """Product of z-series with power-sum-basis coefficients."""
    out = {}
    for z1, s1 in a.items():
        for z2, s2 in b.items():
            slot = out.setdefault(z1 + z2, {})
            for k1, v1 in s1.items():
                for k2, v2 in s2.items():
                    k = _psort(k1 + k2)
                    w = slot.get(k)
                    w = v1 * v2 if w is None else w + v1 * v2
                    if w:
                        slot[k] = w
                    else:
                        slot.pop(k, None)
    return {z: s for z, s in out.items() if s}


def plethysm(f: SymFunc, alphabet: Alphabet):
    """``f[alphabet]``; returns a SymFunc when no ``z`` survives, else
    ``{z_exponent: SymFunc}`` (power-sum basis)."""
    fp = f.to("p")
    total = {}
    pk_cache = {}
    for lam, c in fp.terms.items():
        acc = {0: {(): c}}
        for k in lam:
            if k not in pk_cache:
                pk_cache[k] = alphabet.power_sum(k)
            acc = _zmul(acc, pk_cache[k])
        for z, s in acc.items():
            slot = total.setdefault(z, {})
            for key, v in s.items():
                w = slot.get(key)
                w = v if w is None else w + v
                if w:
                    slot[key] = w
                else:
                    slot.pop(key, None)
    series = {z: SymFunc._raw("p", s) for z, s in total.items() if s}
    if all(z == 0 for z in series):
        return series.get(0, SymFunc.zero("p"))
    return series


def h_n_plethysm(n: int, alphabet: Alphabet):
    return plethysm(SymFunc.basis_element("h", (n,)) if n else SymFunc.one("p"), alphabet)


def plethystic_exp(alphabet: Alphabet, N: int) -> dict:
    """Truncated ``Exp[z * alphabet] = sum_{n <= N} z^n h_n[alphabet]``."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    out = {}
    for n in range(N + 1):
        hn = h_n_plethysm(n, alphabet)
        if isinstance(hn, dict):
            raise ValueError("alphabet passed to plethystic_exp must not contain z")
        if hn:
            out[n] = hn
    return out


ONE_MINUS_T_X = (1 - TA) * X


# ---------------------------------------------------------------------------
# Jing operators and Hall-Littlewood functions
# ---------------------------------------------------------------------------

def jing_B(n: int, f: SymFunc) -> SymFunc:
    """``<z^n> f[X - z^{-1}] Exp[(1-t) z X]``, returned in the m basis."""
    if n < 0:
        raise ValueError("Jing index must be non-negative")
    out = SymFunc.zero("p")
    fm = f.to("m")
    for lam, c in fm.terms.items():
        out = out + _jing_on_m(n, lam).scale(c)
    return out.to("m")


@lru_cache(maxsize=None)
def _jing_on_m(n: int, lam: tuple) -> SymFunc:
    shifted = plethysm(SymFunc.basis_element("m", lam), X - Z_INV)
    if isinstance(shifted, SymFunc):
        shifted = {0: shifted}
    # z^{-j} from the shift pairs with z^{n+j} from Exp
    N = n + sum(lam)
    exp = plethystic_exp(ONE_MINUS_T_X, N)
    out = SymFunc.zero("p")
    for zexp, g in shifted.items():
        k = n - zexp
        if k in exp:
            out = out + g * exp[k]
    return out


@lru_cache(maxsize=None)
def hall_littlewood_P(lam) -> SymFunc:
    """``B_{lam_1} B_{lam_2} ... B_{lam_l}(1)`` in the m basis."""
    f = SymFunc.one("m")
    for part in reversed(tuple(lam)):
        f = jing_B(part, f)
    return f


def _hlp_to_m(f: SymFunc) -> SymFunc:
    out = SymFunc.zero("m")
    for lam, c in f.terms.items():
        out = out + hall_littlewood_P(lam).scale(c)
    return out


@lru_cache(maxsize=None)
def hlp_triangularity(d: int) -> bool:
    """Check that ``P_lam = c m_lam + (dominance-lower terms)`` with ``c != 0``."""
    for lam in partitions(d):
        P = hall_littlewood_P(lam)
        if not P.coefficient(lam):
            return False
        if any(not dominance_leq(mu, lam) for mu in P.terms):
            return False
    return True


def expand_in_HLP(f: SymFunc) -> SymFunc:
    """Coefficients ``c_lam`` with ``f = sum c_lam P_lam``."""
    fm = f.to("m")
    out = {}
    for d in sorted(fm.degrees()):
        if not hlp_triangularity(d):
            raise SingularMatrixError(f"Hall-Littlewood family not triangular in degree {d}")
        rem = dict(fm.homogeneous_part(d).terms)
        # reverse-lex order refines dominance: leading terms come first
        for lam in partitions(d):
            c = rem.get(lam)
            if not c:
                continue
            P = hall_littlewood_P(lam)
            coef = c / P.coefficient(lam)
            out[lam] = coef
            for mu, v in P.terms.items():
                w = rem.get(mu, ZERO) - coef * v
                if w:
                    rem[mu] = w
                else:
                    rem.pop(mu, None)
        if rem:
            raise SingularMatrixError(f"could not expand degree {d} part in HLP")
    return SymFunc._raw("HLP", out)


# ---------------------------------------------------------------------------
# alphabet splitting
# ---------------------------------------------------------------------------

def _distinct_arrangements(parts: tuple, j: int):
    """All exponent vectors of length ``j`` whose nonzero entries are ``parts``."""
    if len(parts) > j:
        return
    seen = set()
    for pos in combinations(range(j), len(parts)):
        for perm in _unique_perms(parts):
            e = [0] * j
            for p, v in zip(pos, perm):
                e[p] = v
            e = tuple(e)
            if e not in seen:
                seen.add(e)
                yield e


def _unique_perms(parts):
    # small inputs only
    return sorted(set(permutations(parts)))


@lru_cache(maxsize=None)
def monomial_sym_poly(lam: tuple, nvars: int) -> tuple:
    """Exponent vectors of ``m_lam(x_1..x_nvars)`` (coefficient 1 each)."""
    return tuple(_distinct_arrangements(tuple(lam), nvars))


def _sub_multisets(lam: tuple):
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    keys = sorted(mult, reverse=True)

    def rec(idx):
        if idx == len(keys):
            yield ()
            return
        k = keys[idx]
        for c in range(mult[k] + 1):
            for rest in rec(idx + 1):
                yield (k,) * c + rest

    yield from rec(0)


def _remove(lam: tuple, sub: tuple) -> tuple:
    rest = list(lam)
    for p in sub:
        rest.remove(p)
    return tuple(rest)


@lru_cache(maxsize=None)
def split_m(lam: tuple, j: int) -> tuple:
    """``m_lam[x_1+..+x_j + Y] = sum x^a m_nu[Y]`` as ``((a, nu), ...)``."""
    out = []
    for sub in _sub_multisets(lam):
        nu = _remove(lam, sub)
        for a in monomial_sym_poly(sub, j):
            out.append((a, nu))
    return tuple(out)


def split_alphabet(f: SymFunc, j: int) -> dict:
    """Expand ``f[x_1 + .. + x_j + tail]`` as ``{(exponents, tail partition): c}``."""
    if j < 0:
        raise ValueError("split index must be non-negative")
    out = {}
    for lam, c in f.to("m").terms.items():
        for key in split_m(lam, j):
            w = out.get(key)
            w = c if w is None else w + c
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return out
