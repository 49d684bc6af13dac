"""Exact elements of the field Q(q, t).

A :class:`QtScalar` is a reduced fraction of two integer polynomials in
``q`` and ``t``.  Polynomial arithmetic and gcds are delegated to FLINT
(``python-flint``); this module only keeps the fraction canonical:

* numerator and denominator are coprime,
* the leading coefficient of the denominator (graded lex, ``q > t``) is
  positive,
* zero is ``0/1``,
* no negative powers of ``q`` or ``t`` are stored.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "deglex")
_Q, _T = CTX.gens()
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0): 1})


def _poly_const(c):
    return CTX.from_dict({(0, 0): int(c)}) if c else _ZERO


def _monomial(i, j):
    return CTX.from_dict({(i, j): 1})


class QtScalar:
    """Canonical fraction ``num/den`` over Z[q, t]."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _reduced=False):
        if isinstance(num, QtScalar):
            if den is not None:
                raise TypeError("cannot pass a denominator with a QtScalar")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        if isinstance(num, Fraction):
            num, den = _poly_const(num.numerator), _poly_const(num.denominator) * (
                den if den is not None else _ONE)
        elif isinstance(num, int):
            num = _poly_const(num)
        if den is None:
            den = _ONE
        elif isinstance(den, int):
            den = _poly_const(den)
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "QtScalar":
        """``coeff * q**i * t**j`` with possibly negative exponents."""
        if coeff == 0:
            return ZERO
        num = CTX.from_dict({(max(i, 0), max(j, 0)): coeff})
        den = CTX.from_dict({(max(-i, 0), max(-j, 0)): 1})
        return cls(num, den, _reduced=True)

    @classmethod
    def from_laurent(cls, terms) -> "QtScalar":
        """Build from ``{(i, j): c}`` meaning ``sum c q^i t^j``."""
        terms = {k: c for k, c in terms.items() if c}
        if not terms:
            return ZERO
        mi = min(0, min(i for i, _ in terms))
        mj = min(0, min(j for _, j in terms))
        num = CTX.from_dict({(i - mi, j - mj): int(c) for (i, j), c in terms.items()})
        return cls(num, _monomial(-mi, -mj))

    @classmethod
    def parse(cls, text: str) -> "QtScalar":
        return parse_scalar(text)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            if b.is_one():
                return QtScalar(a + c, _ONE, _reduced=True)
            return QtScalar(a + c, b)
        if b.is_one():
            return QtScalar(a * d + c, d, _reduced=True)
        if d.is_one():
            return QtScalar(a + c * b, b, _reduced=True)
        # Henrici: only the gcd of the denominators can cancel
        g = b.gcd(d)
        if g.is_one():
            return QtScalar(a * d + c * b, b * d, _reduced=True)
        b1, d1 = b / g, d / g
        num = a * d1 + c * b1
        if num.is_zero():
            return ZERO
        h = num.gcd(g)
        if not h.is_one():
            num, g = num / h, g / h
        return QtScalar(*_sign(num, b1 * d1 * g), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return QtScalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return QtScalar(self.num * other.num, _ONE, _reduced=True)
        # cross-cancel keeps the intermediate polynomials small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = _exact(self.num, g1) * _exact(other.num, g2)
        den = _exact(self.den, g2) * _exact(other.den, g1)
        return QtScalar(*_sign(num, den), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QtScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return QtScalar(*_sign(self.den, self.num), _reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QtScalar(self.num ** k, self.den ** k, _reduced=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.to_dict().items()),
                               tuple(self.den.to_dict().items())))
        return self._hash

    # -- substitutions --------------------------------------------------
    def power_substitute(self, k: int) -> "QtScalar":
        """Return ``f(q**k, t**k)`` for ``k >= 1``."""
        if k == 1:
            return self
        return QtScalar(self.num.inflate([k, k]), self.den.inflate([k, k]))

    def t_valuation(self):
        """Order of vanishing at ``t = 0`` (``math.inf`` for zero)."""
        if self.num.is_zero():
            return math.inf
        return _tval(self.num) - _tval(self.den)

    # -- text -----------------------------------------------------------
    def __str__(self):
        if self.den.is_one():
            return format_poly(self.num)
        n = format_poly(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        d = format_poly(self.den)
        if len(self.den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"QtScalar('{self}')"


def _tval(p):
    return min(e[1] for e in p.monoms())


def _exact(p, g):
    return p if g.is_one() else p / g


def _sign(num, den):
    if den.leading_coefficient() < 0:
        return -num, -den
    return num, den


def _reduce(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(q,t)")
    if num.is_zero():
        return _ZERO, _ONE
    g = num.gcd(den)
    if not g.is_one():
        num, den = num / g, den / g
    return _sign(num, den)


def _coerce(x):
    if isinstance(x, QtScalar):
        return x
    if isinstance(x, int):
        return QtScalar(_poly_const(x), _ONE, _reduced=True)
    if isinstance(x, Fraction):
        return QtScalar(x)
    return NotImplemented


def qt(x) -> QtScalar:
    """Coerce ints, Fractions and strings to :class:`QtScalar`."""
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q,t)")
    return c


def t_adic_valuation(a) -> float:
    return qt(a).t_valuation()


def qt_arith(a, b, op: str) -> QtScalar:
    a, b = qt(a), qt(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _term_key(monom):
    i, j = monom
    return (i + j, -i)


def format_poly(p) -> str:
    """Expanded text of a polynomial in q, t: ascending degree, q before t."""
    items = sorted(p.to_dict().items(), key=lambda kv: _term_key(kv[0]))
    if not items:
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(items):
        c = int(c)
        mono = "*".join(
            s for s in (
                ("q" if i == 1 else f"q^{i}") if i else "",
                ("t" if j == 1 else f"t^{j}") if j else "",
            ) if s)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


Q = QtScalar(_Q, _ONE, _reduced=True)
T = QtScalar(_T, _ONE, _reduced=True)
ZERO = QtScalar(_ZERO, _ONE, _reduced=True)
ONE = QtScalar(_ONE, _ONE, _reduced=True)


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = _eval_exponent(node.right)
            return _eval_node(node.left) ** exp
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ValueError(f"unsupported operator {type(node.op).__name__}")
        return op(_eval_node(node.left), _eval_node(node.right))
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return qt(node.value)
    if isinstance(node, ast.Name):
        if node.id == "q":
            return Q
        if node.id == "t":
            return T
    raise ValueError(f"cannot parse scalar near {ast.dump(node)}")


def _eval_exponent(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if (isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub)
            and isinstance(node.operand, ast.Constant)):
        return -node.operand.value
    raise ValueError("exponents must be integer literals")


def parse_scalar(text: str) -> QtScalar:
    """Parse text like ``"(1 - t)/(q - t)"`` or ``"q^-1*(1-t)"``."""
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed scalar {text!r}") from exc
    return _eval_node(tree)
