"""Sparse Laurent polynomials in x_1..x_n over Q(q, t) and the basic
operators of the standard representation (T_i, X_i, omega_n, s_i)."""

from __future__ import annotations

import re
from functools import lru_cache

from .qt import ONE, ZERO, QtScalar, qt

_ONE_MINUS_T = qt("1 - t")
_T_INV = QtScalar.monomial(0, -1)


class XPoly:
    """Immutable sparse Laurent polynomial.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero
    :class:`QtScalar` coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                c = qt(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, exps, coeff=ONE) -> "XPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "XPoly":
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(e)

    @classmethod
    def one(cls, nvars: int) -> "XPoly":
        return cls.monomial((0,) * nvars)

    @classmethod
    def zero(cls, nvars: int) -> "XPoly":
        return cls(nvars)

    # -- queries --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps) -> QtScalar:
        return self.terms.get(tuple(exps), ZERO)

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, d=None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms.items())
        return XPoly._raw(self.nvars, out)

    def __neg__(self):
        return XPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "XPoly":
        c = qt(c)
        if not c:
            return XPoly(self.nvars)
        if c.is_one():
            return self
        return XPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, XPoly):
            self._check(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = out.get(e)
                    v = c1 * c2 if v is None else v + c1 * c2
                    if v:
                        out[e] = v
                    else:
                        out.pop(e, None)
            return XPoly._raw(self.nvars, out)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def map_monomials(self, image) -> "XPoly":
        """Apply a linear operator given on monomials by ``image(e) -> [(e', c)]``."""
        out = {}
        for e, c in self.terms.items():
            for e2, c2 in image(e):
                v = out.get(e2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    out[e2] = v
                else:
                    out.pop(e2, None)
        return XPoly._raw(self.nvars, out)

    def __str__(self):
        return format_xpoly(self)

    def __repr__(self):
        return f"XPoly({self.nvars}, {format_xpoly(self)!r})"


def _accumulate(out, items):
    for e, c in items:
        v = out.get(e)
        v = c if v is None else v + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)


def format_monomial(e, offset: int = 0) -> str:
    parts = []
    for i, a in enumerate(e, start=1 + offset):
        if a == 1:
            parts.append(f"x{i}")
        elif a:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def _mono_key(e):
    # descending degree, then lex-descending exponents
    return (-sum(e), tuple(-a for a in e))


def format_xpoly(p: XPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for e in sorted(p.terms, key=_mono_key):
        c = p.terms[e]
        mono = format_monomial(e)
        if c.is_one():
            out.append(mono or "1")
        elif (-c).is_one():
            out.append("-" + (mono or "1"))
        else:
            out.append(f"({c})" + (f"*{mono}" if mono else ""))
    return " + ".join(out)


# ---------------------------------------------------------------------------
# operators on monomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def T_on_monomial(i: int, e: tuple) -> tuple:
    """Demazure-Lusztig ``T_i`` (1-based) applied to ``x^e``.

    ``T_i f = s_i f + (1 - t) x_i (f - s_i f) / (x_i - x_{i+1})``; the divided
    difference of a monomial is a geometric sum, so no division is needed.
    """
    a, b = e[i - 1], e[i]
    swapped = e[:i - 1] + (b, a) + e[i + 1:]
    out = [(swapped, ONE)]
    if a > b:
        for k in range(a - b):
            out.append((e[:i - 1] + (a - k, b + k) + e[i + 1:], _ONE_MINUS_T))
    elif a < b:
        neg = -_ONE_MINUS_T
        for k in range(b - a):
            out.append((e[:i - 1] + (b - k, a + k) + e[i + 1:], neg))
    return tuple(_merge(out))


@lru_cache(maxsize=1 << 18)
def T_inv_on_monomial(i: int, e: tuple) -> tuple:
    """``T_i^{-1} = t^{-1}(T_i - 1 + t)``."""
    out = [(e2, c * _T_INV) for e2, c in T_on_monomial(i, e)]
    out.append((e, -_ONE_MINUS_T * _T_INV))
    return tuple(_merge(out))


def _merge(pairs):
    acc = {}
    for e, c in pairs:
        v = acc.get(e)
        acc[e] = c if v is None else v + c
    return [(e, c) for e, c in acc.items() if c]


def omega_on_monomial(e: tuple):
    """``omega_n f(x_1..x_n) = f(q^{-1} x_n, x_1, .., x_{n-1})``."""
    return ((e[1:] + e[:1], QtScalar.monomial(-e[0], 0)),)


def omega_inv_on_monomial(e: tuple):
    """``omega_n^{-1} f(x_1..x_n) = f(x_2, .., x_n, q x_1)``."""
    return ((e[-1:] + e[:-1], QtScalar.monomial(e[-1], 0)),)


def demazure_T(i: int, f: XPoly) -> XPoly:
    if not 1 <= i < f.nvars:
        raise ValueError(f"T_{i} undefined on {f.nvars} variables")
    return f.map_monomials(lambda e: T_on_monomial(i, e))


def demazure_T_inv(i: int, f: XPoly) -> XPoly:
    if not 1 <= i < f.nvars:
        raise ValueError(f"T_{i}^-1 undefined on {f.nvars} variables")
    return f.map_monomials(lambda e: T_inv_on_monomial(i, e))


def omega(f: XPoly) -> XPoly:
    return f.map_monomials(omega_on_monomial)


def omega_inv(f: XPoly) -> XPoly:
    return f.map_monomials(omega_inv_on_monomial)


def swap(i: int, f: XPoly) -> XPoly:
    if not 1 <= i < f.nvars:
        raise ValueError(f"s_{i} undefined on {f.nvars} variables")
    return f.map_monomials(lambda e: ((e[:i - 1] + (e[i], e[i - 1]) + e[i + 1:], ONE),))


def mul_X(i: int, f: XPoly, power: int = 1) -> XPoly:
    if not 1 <= i <= f.nvars:
        raise ValueError(f"X_{i} undefined on {f.nvars} variables")

    def image(e):
        e = list(e)
        e[i - 1] += power
        return ((tuple(e), ONE),)

    return f.map_monomials(image)


# ---------------------------------------------------------------------------
# operator words
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(T|X|Y|s|w)(\d*)(\^-1)?$")


def parse_word(word):
    """Turn ``"T1 w^-1 Y2^-1"`` (or a list of tokens) into ``[(gen, i, inv)]``."""
    if isinstance(word, str):
        word = word.split()
    out = []
    for tok in word:
        m = _TOKEN.match(tok.replace("ω", "w"))
        if not m:
            raise ValueError(f"malformed operator token {tok!r}")
        gen, idx, inv = m.group(1), m.group(2), bool(m.group(3))
        if gen == "w":
            if idx:
                raise ValueError(f"omega takes no index: {tok!r}")
            out.append(("w", 0, inv))
            continue
        if not idx:
            raise ValueError(f"missing index in {tok!r}")
        if gen == "s" and inv:
            raise ValueError("s_i is an involution; no inverse token")
        out.append((gen, int(idx), inv))
    return out


def apply_generator(gen, i, inv, f: XPoly) -> XPoly:
    if gen == "T":
        return demazure_T_inv(i, f) if inv else demazure_T(i, f)
    if gen == "X":
        return mul_X(i, f, -1 if inv else 1)
    if gen == "w":
        return omega_inv(f) if inv else omega(f)
    if gen == "s":
        return swap(i, f)
    if gen == "Y":
        from .daha import cherednik_Y, cherednik_Y_inv

        return cherednik_Y_inv(i, f) if inv else cherednik_Y(i, f)
    raise ValueError(f"unknown generator {gen!r}")


def compose_ops(word, f: XPoly) -> XPoly:
    """Apply an operator word to ``f``; the rightmost letter acts first."""
    for gen, i, inv in reversed(parse_word(word)):
        if gen in ("T", "s") and not 1 <= i < f.nvars:
            raise ValueError(f"index {i} out of range for {gen} on {f.nvars} variables")
        if gen in ("X", "Y") and not 1 <= i <= f.nvars:
            raise ValueError(f"index {i} out of range for {gen} on {f.nvars} variables")
        f = apply_generator(gen, i, inv, f)
    return f
