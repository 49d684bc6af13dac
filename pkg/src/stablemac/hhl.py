"""Non-attacking fillings and the HHL-type formulas for ``E_mu`` and its
stable limit.

Conventions (all in the orientation where column ``i`` of the diagram
carries basement label ``i`` and ``x_i``):

* the diagram of ``mu`` has column ``i`` of height ``mu_i``; row 0 is the
  basement with ``sigma_hat((i, 0)) = i``;
* two cells attack if they lie in the same row, or in adjacent rows with
  the upper cell strictly to the *left* of the lower one;
* ``leg(i, j) = mu_i - j`` and
  ``arm(i, j) = #{k < i : j <= mu_k <= mu_i} + #{k > i : j - 1 <= mu_k < mu_i}``;
* ``u`` is a descent when ``sigma_hat(u) > sigma_hat(d(u))`` and
  ``maj = sum over descents of (leg + 1)``;
* for columns ``i < k`` the triples are ``((k, r), (i, r), (k, r-1))`` for
  ``1 <= r <= mu_i`` when ``mu_k >= mu_i``, and ``((k, r), (i, r), (i, r+1))``
  for ``0 <= r <= mu_k`` when ``mu_k < mu_i``; ``coinv`` counts the triples
  whose labels read cyclically increasing, a tie between vertically
  adjacent cells counting the upper cell as smaller.

These were pinned against the eigen-oracle :func:`stablemac.daha.oracle_E`
(see ``tests/test_hhl.py``); the published examples then follow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .combinat import partitions_upto, zero_pad
from .qt import ONE, QtScalar, qt
from .xpoly import XPoly

_OMT = qt("1 - t")


def diagram_cells(mu) -> list:
    """Non-basement cells ``(column, row)`` in filling order (row-major, bottom up)."""
    return [(i, j) for j in range(1, max(mu, default=0) + 1)
            for i in range(1, len(mu) + 1) if mu[i - 1] >= j]


def leg(mu, cell) -> int:
    i, j = cell
    return mu[i - 1] - j


def arm(mu, cell) -> int:
    i, j = cell
    h = mu[i - 1]
    a = sum(1 for k in range(1, i) if j <= mu[k - 1] <= h)
    a += sum(1 for k in range(i + 1, len(mu) + 1) if j - 1 <= mu[k - 1] < h)
    return a


def _cyclic(a, b, c) -> bool:
    return a < b < c or b < c < a or c < a < b


@dataclass(frozen=True)
class Filling:
    """An augmented non-attacking filling of the diagram of ``mu``."""

    mu: tuple
    labels: tuple  # ((cell, label), ...) for non-basement cells, filling order

    @cached_property
    def sigma(self) -> dict:
        s = {(i, 0): i for i in range(1, len(self.mu) + 1)}
        s.update(self.labels)
        return s

    def below(self, cell) -> int:
        i, j = cell
        return self.sigma[(i, j - 1)]

    @cached_property
    def weight(self) -> tuple:
        """Exponent vector: how often each label ``1..len(mu)`` occurs."""
        e = [0] * len(self.mu)
        for _, a in self.labels:
            e[a - 1] += 1
        return tuple(e)

    def label_counts(self, size: int) -> tuple:
        e = [0] * size
        for _, a in self.labels:
            e[a - 1] += 1
        return tuple(e)

    @cached_property
    def descents(self) -> tuple:
        return tuple(u for u, a in self.labels if a > self.below(u))

    @cached_property
    def maj(self) -> int:
        return sum(leg(self.mu, u) + 1 for u in self.descents)

    @cached_property
    def coinv(self) -> int:
        mu, s = self.mu, self.sigma
        n = len(mu)
        count = 0
        for i in range(1, n + 1):
            for k in range(i + 1, n + 1):
                if mu[k - 1] >= mu[i - 1]:
                    for r in range(1, mu[i - 1] + 1):
                        # lower cell (k, r-1) ranks above an equal (k, r)
                        x = (s[(k, r)], 0)
                        z = (s[(k, r - 1)], 1)
                        y = (s[(i, r)], 0)
                        count += _cyclic(x, y, z)
                else:
                    for r in range(0, mu[k - 1] + 1):
                        # upper cell (i, r+1) ranks below an equal (i, r)
                        x = (s[(k, r)], 0)
                        y = (s[(i, r)], 0)
                        z = (s[(i, r + 1)], -1)
                        count += _cyclic(x, y, z)
        return count

    def gamma(self, limit: bool = False) -> QtScalar:
        return gamma_factor(self, limit)

    def contribution(self, limit: bool = False) -> QtScalar:
        """``q^{-maj} t^{coinv}`` times the cell product."""
        return QtScalar.monomial(-self.maj, self.coinv) * self.gamma(limit)

    def dump(self, limit: bool = False) -> str:
        cells = " ".join(f"({i},{j}):{a}" for (i, j), a in
                         sorted(self.labels, key=lambda p: p[0]))
        return (f"{cells or '-'} | maj={self.maj} coinv={self.coinv} "
                f"gamma={self.gamma(limit)}")


def gamma_factor(filling: Filling, limit: bool = False) -> QtScalar:
    """Product over cells ``u`` with ``sigma_hat(u) != sigma_hat(d(u))``.

    Finite mode uses ``(1-t)/(1-q^{-(leg+1)} t^{arm+1})`` everywhere; limit
    mode replaces the row-1 factors by a bare ``(1-t)``.
    """
    out = ONE
    for u, a in filling.labels:
        if a == filling.below(u):
            continue
        if limit and u[1] == 1:
            out = out * _OMT
        else:
            out = out * _cell_factor(leg(filling.mu, u), arm(filling.mu, u))
    return out


@lru_cache(maxsize=None)
def _cell_factor(lg: int, am: int) -> QtScalar:
    return _OMT / (1 - QtScalar.monomial(-(lg + 1), am + 1))


def enumerate_fillings(mu, N: int | None = None, multiplicities: dict | None = None):
    """Yield every non-attacking filling of ``mu`` with labels in ``1..N``.

    ``multiplicities`` maps a label to the exact number of times it must
    be used; other labels are unconstrained.
    """
    mu = tuple(mu)
    n = len(mu)
    if N is None:
        N = n
    cells = diagram_cells(mu)
    need = dict(multiplicities or {})
    if any(v < 0 for v in need.values()):
        return
    if sum(need.values()) > len(cells):
        return
    sigma = {(i, 0): i for i in range(1, n + 1)}
    used = {}
    chosen = []

    def conflicts(cell):
        i, j = cell
        out = set()
        for k in range(1, i):
            if mu[k - 1] >= j:
                out.add(sigma[(k, j)])
        for k in range(i + 1, n + 1):
            if mu[k - 1] >= j - 1:
                out.add(sigma[(k, j - 1)])
        return out

    def rec(idx, outstanding):
        if idx == len(cells):
            if outstanding == 0:
                yield Filling(mu, tuple(chosen))
            return
        if outstanding > len(cells) - idx:
            return
        cell = cells[idx]
        bad = conflicts(cell)
        for a in range(1, N + 1):
            if a in bad:
                continue
            if a in need:
                if used.get(a, 0) >= need[a]:
                    continue
                delta = 1
            else:
                delta = 0
            used[a] = used.get(a, 0) + 1
            sigma[cell] = a
            chosen.append((cell, a))
            yield from rec(idx + 1, outstanding - delta)
            chosen.pop()
            del sigma[cell]
            used[a] -= 1

    yield from rec(0, sum(need.values()))


def hhl_E(mu) -> XPoly:
    """Nonsymmetric Macdonald polynomial from the filling formula."""
    mu = tuple(mu)
    out = {}
    for f in enumerate_fillings(mu):
        c = f.contribution()
        e = f.weight
        v = out.get(e)
        out[e] = c if v is None else v + c
    return XPoly(len(mu), out)


def stable_E_terms(mu) -> dict:
    """Raw limit expansion ``{(x-exponents, tail partition): coefficient}``.

    The tail alphabet is ``x_{n+1} + x_{n+2} + ...`` with ``n = len(mu)``.
    """
    mu = tuple(mu)
    n = len(mu)
    out = {}
    for lam in partitions_upto(sum(mu)):
        ell = len(lam)
        shape = zero_pad(mu, ell)
        need = {n + i + 1: lam[i] for i in range(ell)}
        for f in enumerate_fillings(shape, n + ell, need):
            key = (f.label_counts(n + ell)[:n], lam)
            c = f.contribution(limit=True)
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def stable_E(mu):
    """Stable limit of ``E_{mu * 0^m}`` as an almost-symmetric function."""
    return _stable_E_cached(tuple(mu))


@lru_cache(maxsize=None)
def _stable_E_cached(mu):
    from .almostsym import AlmostSym

    return AlmostSym(len(mu), stable_E_terms(mu)).lowered()


def convergence_witness(mu, m_max: int = 3) -> dict:
    """t-adic distance between ``E_{mu*0^m}`` and the projected limit.

    For each ``m`` the minimum t-adic valuation over monomials of
    ``E_{mu*0^m} - pi_{n+m}(E~_mu)`` is recorded; the sequence must be
    weakly increasing.
    """
    from .almostsym import project_pi

    mu = tuple(mu)
    lim = stable_E(mu)
    vals = []
    for m in range(m_max + 1):
        finite = hhl_E(zero_pad(mu, m))
        proj = project_pi(lim, len(mu) + m)
        diff = finite - proj
        v = min((c.t_valuation() for c in diff.terms.values()), default=float("inf"))
        vals.append(v)
    increasing = all(a <= b for a, b in zip(vals, vals[1:]))
    return {"mu": list(mu), "valuations": vals,
            "status": "pass" if increasing else "fail"}
