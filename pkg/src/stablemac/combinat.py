"""Compositions, partitions and the orders used on them."""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate


def composition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be non-negative: {parts}")
    return parts


def partition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    return parts


def sort_composition(mu) -> tuple:
    """Nonzero parts of ``mu`` in weakly decreasing order."""
    return tuple(sorted((p for p in mu if p), reverse=True))


def sort_with_zeros(mu) -> tuple:
    return tuple(sorted(mu, reverse=True))


def dominance_leq(nu, lam) -> bool:
    """``nu`` is weakly below ``lam`` in dominance (equal sizes required)."""
    if sum(nu) != sum(lam):
        return False
    n = max(len(nu), len(lam))
    a = list(accumulate(tuple(nu) + (0,) * (n - len(nu))))
    b = list(accumulate(tuple(lam) + (0,) * (n - len(lam))))
    return all(x <= y for x, y in zip(a, b))


def dominance_less(nu, lam) -> bool:
    return tuple(nu) != tuple(lam) and dominance_leq(nu, lam)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int):
    for d in range(n + 1):
        yield from partitions(d)


def compositions(total: int, length: int):
    """Weak compositions of ``total`` into ``length`` parts, lex decreasing."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def s_i(mu, i: int) -> tuple:
    """Swap positions ``i`` and ``i+1`` (1-based)."""
    mu = list(mu)
    mu[i - 1], mu[i] = mu[i], mu[i - 1]
    return tuple(mu)


@lru_cache(maxsize=None)
def orbit_below(mu: tuple) -> frozenset:
    """Rearrangements of ``mu`` reachable by swaps that move a larger entry left.

    A pair of positions ``i < j`` with ``mu_i < mu_j`` may be exchanged; the
    closure of ``mu`` under such moves is everything below it (inclusive).
    """
    seen = {mu}
    stack = [mu]
    while stack:
        cur = stack.pop()
        for i in range(len(cur)):
            for j in range(i + 1, len(cur)):
                if cur[i] < cur[j]:
                    nxt = list(cur)
                    nxt[i], nxt[j] = nxt[j], nxt[i]
                    nxt = tuple(nxt)
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    return frozenset(seen)


def bruhat_less(nu, mu) -> bool:
    """Order used for the triangularity test of nonsymmetric Macdonald polynomials.

    Only the consequences needed for support containment are encoded: a
    strictly smaller sorted shape (dominance) is below, and within one
    ``S_n``-orbit the swap rule of :func:`orbit_below` applies.
    """
    nu, mu = tuple(nu), tuple(mu)
    if nu == mu or len(nu) != len(mu) or sum(nu) != sum(mu):
        return False
    a, b = sort_with_zeros(nu), sort_with_zeros(mu)
    if a != b:
        return dominance_less(a, b)
    return nu in orbit_below(mu)


def bruhat_support_ok(mu, p) -> bool:
    """Every monomial of ``p`` other than ``x^mu`` is Bruhat-below ``mu``."""
    mu = tuple(mu)
    return all(nu == mu or bruhat_less(nu, mu) for nu in p.terms)


def concat(mu, nu) -> tuple:
    return tuple(mu) + tuple(nu)


def zero_pad(mu, m: int) -> tuple:
    return tuple(mu) + (0,) * m


def multiplicities(lam) -> dict:
    out = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def z_lambda(lam) -> int:
    """``prod_i i^{m_i} m_i!`` for the power-sum inner product."""
    from math import factorial

    z = 1
    for part, m in multiplicities(lam).items():
        z *= part ** m * factorial(m)
    return z
