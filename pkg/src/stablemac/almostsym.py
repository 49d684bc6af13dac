"""Almost-symmetric functions.

An element of P(k)+ is stored as ``{(a, lam): c}`` meaning
``sum c * x^a * m_lam[x_{k+1} + x_{k+2} + ...]`` with ``a`` of length ``k``.
The split ``k`` is allowed to be larger than necessary while computing;
:meth:`AlmostSym.lowered` restores the minimal one.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache

from .qt import ONE, ZERO, QtScalar, qt
from .symfunc import SymFunc, monomial_sym_poly, split_m
from .xpoly import T_inv_on_monomial, T_on_monomial, XPoly, format_monomial


def _acc(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class AlmostSym:
    __slots__ = ("split", "terms")

    def __init__(self, split: int, terms=None):
        if split < 0:
            raise ValueError("split must be non-negative")
        self.split = split
        clean = {}
        for (a, lam), c in (terms or {}).items():
            a, lam = tuple(a), tuple(lam)
            if len(a) != split:
                raise ValueError(f"exponent vector {a} does not match split {split}")
            if any(x < 0 for x in a):
                raise ValueError("negative exponent")
            if any(p <= 0 for p in lam) or list(lam) != sorted(lam, reverse=True):
                raise ValueError(f"not a partition: {lam}")
            _acc(clean, (a, lam), qt(c))
        self.terms = clean

    @classmethod
    def _raw(cls, split, terms):
        obj = cls.__new__(cls)
        obj.split = split
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, split=0):
        return cls._raw(split, {})

    @classmethod
    def one(cls):
        return cls._raw(0, {((), ()): ONE})

    @classmethod
    def x(cls, i: int):
        """The variable ``x_i``."""
        return cls._raw(i, {(tuple(int(j == i) for j in range(1, i + 1)), ()): ONE})

    @classmethod
    def from_symfunc(cls, F: SymFunc, split: int = 0) -> "AlmostSym":
        """``F[x_1 + x_2 + ...]`` presented at the given split."""
        terms = {((), lam): c for lam, c in F.to("m").terms.items()}
        return raise_split(cls._raw(0, terms), split)

    @classmethod
    def from_xpoly(cls, p: XPoly) -> "AlmostSym":
        return cls._raw(p.nvars, {(e, ()): c for e, c in p.terms.items()})

    # -- queries ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {sum(a) + sum(lam) for a, lam in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, a, lam=()) -> QtScalar:
        return self.terms.get((tuple(a), tuple(lam)), ZERO)

    def lowered(self) -> "AlmostSym":
        return lower_split(self)

    def raised(self, k: int) -> "AlmostSym":
        return raise_split(self, k)

    def to_symfunc(self) -> SymFunc:
        """Only for split 0 (after lowering)."""
        f = self.lowered()
        if f.split:
            raise ValueError("element is not symmetric")
        return SymFunc("m", {lam: c for (_, lam), c in f.terms.items()})

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, AlmostSym):
            return NotImplemented
        k = max(self.split, other.split)
        a, b = raise_split(self, k), raise_split(other, k)
        out = dict(a.terms)
        for key, c in b.terms.items():
            _acc(out, key, c)
        return AlmostSym._raw(k, out)

    def __neg__(self):
        return AlmostSym._raw(self.split, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlmostSym":
        c = qt(c)
        if not c:
            return AlmostSym._raw(self.split, {})
        return AlmostSym._raw(self.split, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlmostSym):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlmostSym):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        f = self.lowered()
        return hash((f.split, frozenset(f.terms.items())))

    # -- text -----------------------------------------------------------------
    def __str__(self):
        return format_almostsym(self)

    def __repr__(self):
        return f"AlmostSym({format_almostsym(self)!r})"

    def pretty(self) -> str:
        return pretty_almostsym(self)

    def as_json(self) -> dict:
        return almostsym_json(self)


# ---------------------------------------------------------------------------
# split bookkeeping
# ---------------------------------------------------------------------------

def raise_split(f: AlmostSym, k: int) -> AlmostSym:
    if k < f.split:
        raise ValueError(f"cannot raise split {f.split} to {k}")
    if k == f.split:
        return f
    j = k - f.split
    out = {}
    for (a, lam), c in f.terms.items():
        for b, nu in split_m(lam, j):
            _acc(out, (a + b, nu), c)
    return AlmostSym._raw(k, out)


def lower_split(f: AlmostSym) -> AlmostSym:
    """Smallest presentation: absorb the last finite variable while possible."""
    while f.split > 0:
        k = f.split
        cand = {(a[:-1], lam): c for (a, lam), c in f.terms.items() if a[-1] == 0}
        g = AlmostSym._raw(k - 1, cand)
        if raise_split(g, k).terms != f.terms:
            break
        f = g
    return f


def equal(f: AlmostSym, g: AlmostSym) -> bool:
    k = max(f.split, g.split)
    return raise_split(f, k).terms == raise_split(g, k).terms


def project_pi(f: AlmostSym, n: int) -> XPoly:
    """Set the tail alphabet to ``x_{k+1} + .. + x_n``."""
    if n < f.split:
        raise ValueError(f"projection to {n} variables below split {f.split}")
    r = n - f.split
    out = {}
    for (a, lam), c in f.terms.items():
        for b in monomial_sym_poly(lam, r):
            _acc(out, a + b, c)
    return XPoly._raw(n, out)


@lru_cache(maxsize=None)
def _m_product(lam: tuple, mu: tuple) -> tuple:
    prod = SymFunc("m", {lam: ONE}) * SymFunc("m", {mu: ONE})
    return tuple(prod.terms.items())


def multiply(f: AlmostSym, g: AlmostSym) -> AlmostSym:
    k = max(f.split, g.split)
    f, g = raise_split(f, k), raise_split(g, k)
    out = {}
    for (a1, l1), c1 in f.terms.items():
        for (a2, l2), c2 in g.terms.items():
            a = tuple(x + y for x, y in zip(a1, a2))
            c = c1 * c2
            for nu, v in _m_product(l1, l2):
                _acc(out, (a, nu), c * v)
    return AlmostSym._raw(k, out)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def rho(f: AlmostSym) -> AlmostSym:
    """Keep the terms with positive ``x_1`` exponent."""
    f = raise_split(f, max(f.split, 1))
    return AlmostSym._raw(f.split, {k: v for k, v in f.terms.items() if k[0][0] > 0})


def _finite_map(f: AlmostSym, need: int, mono_op) -> AlmostSym:
    f = raise_split(f, max(f.split, need))
    out = {}
    for (a, lam), c in f.terms.items():
        for b, v in mono_op(a):
            _acc(out, (b, lam), c * v)
    return AlmostSym._raw(f.split, out)


def act_T(i: int, f: AlmostSym) -> AlmostSym:
    if i < 1:
        raise ValueError("T_i needs i >= 1")
    return _finite_map(f, i + 1, lambda a: T_on_monomial(i, a))


def act_T_inv(i: int, f: AlmostSym) -> AlmostSym:
    if i < 1:
        raise ValueError("T_i needs i >= 1")
    return _finite_map(f, i + 1, lambda a: T_inv_on_monomial(i, a))


def act_X(i: int, f: AlmostSym) -> AlmostSym:
    if i < 1:
        raise ValueError("X_i needs i >= 1")

    def bump(a):
        return ((a[:i - 1] + (a[i - 1] + 1,) + a[i:], ONE),)

    return _finite_map(f, i, bump)


# ---------------------------------------------------------------------------
# text and JSON
# ---------------------------------------------------------------------------

def _term_key(key):
    a, lam = key
    return (-(sum(a) + sum(lam)), tuple(-x for x in a), tuple(-p for p in lam))


def format_almostsym(f: AlmostSym) -> str:
    """Canonical text at the minimal split."""
    f = lower_split(f)
    head = f"split={f.split}"
    if not f.terms:
        return head + "; 0"
    body = "; ".join(
        f"[{','.join(map(str, a))}] ⊗ m[{','.join(map(str, lam))}]: {c}"
        for (a, lam), c in sorted(f.terms.items(), key=lambda kv: _term_key(kv[0])))
    return f"{head}; {body}"


_AS_TERM = re.compile(r"^\[([\d,\s]*)\]\s*⊗\s*m\[([\d,\s]*)\]\s*:\s*(.+)$")


def parse_almostsym(text: str) -> AlmostSym:
    head, _, body = text.partition(";")
    m = re.match(r"^\s*split\s*=\s*(\d+)\s*$", head)
    if not m:
        raise ValueError(f"missing split header in {text!r}")
    k = int(m.group(1))
    body = body.strip()
    terms = {}
    if body and body != "0":
        for chunk in body.split(";"):
            mm = _AS_TERM.match(chunk.strip())
            if not mm:
                raise ValueError(f"malformed term {chunk!r}")
            a = tuple(int(x) for x in mm.group(1).split(",") if x.strip())
            lam = tuple(int(x) for x in mm.group(2).split(",") if x.strip())
            terms[(a, lam)] = qt(mm.group(3))
    return AlmostSym(k, terms)


def almostsym_json(f: AlmostSym) -> dict:
    f = lower_split(f)
    return {
        "split": f.split,
        "terms": [{"x": list(a), "m": list(lam), "coeff": str(c)}
                  for (a, lam), c in sorted(f.terms.items(), key=lambda kv: _term_key(kv[0]))],
    }


def almostsym_from_json(obj) -> AlmostSym:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return AlmostSym(obj["split"], {(tuple(t["x"]), tuple(t["m"])): qt(t["coeff"])
                                    for t in obj["terms"]})


def pretty_almostsym(f: AlmostSym) -> str:
    """Human-readable form, e.g. ``x1^2 + ((1 - t)/(q - t))*x1*m[1](x2+...)``."""
    f = lower_split(f)
    if not f.terms:
        return "0"
    tail = f"(x{f.split + 1}+...)"
    parts = []
    for (a, lam), c in sorted(f.terms.items(), key=lambda kv: _term_key(kv[0])):
        pieces = []
        mono = format_monomial(a)
        if mono:
            pieces.append(mono)
        if lam:
            pieces.append(f"m[{','.join(map(str, lam))}]{tail}")
        body = "*".join(pieces) or "1"
        if c.is_one():
            parts.append(body)
        elif body == "1":
            parts.append(f"({c})")
        else:
            parts.append(f"({c})*{body}")
    return " + ".join(parts)
