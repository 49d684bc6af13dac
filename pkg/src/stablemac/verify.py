"""Verification suites.

Every suite returns a list of check records (dicts with a ``status`` of
``"pass"`` or ``"fail"``); :func:`summarize` folds them into a report.
The CLI ``verify`` command and the acceptance tests both sit on top of
these.
"""

from __future__ import annotations

import random
import time
from pathlib import Path

from .combinat import compositions, dominance_leq, partitions, s_i
from .qt import ZERO, qt


def _record(ok: bool, **info) -> dict:
    return {**info, "status": "pass" if ok else "fail"}


def summarize(name: str, checks: list, seconds: float | None = None) -> dict:
    ok = bool(checks) and all(c["status"] == "pass" for c in checks)
    rep = {"suite": name, "status": "pass" if ok else "fail", "checked": len(checks),
           "failures": [c for c in checks if c["status"] != "pass"], "checks": checks}
    if seconds is not None:
        rep["seconds"] = round(seconds, 2)
    return rep


def _comps(max_len: int, max_size: int, min_len: int = 1, min_size: int = 0):
    for n in range(min_len, max_len + 1):
        for d in range(min_size, max_size + 1):
            yield from compositions(d, n)


def daha_relations(ns=(2, 3, 4), box=(-2, 3), rep_factory=None, families=None) -> list:
    from .daha import relation_check

    checks = []
    for n in ns:
        rep = rep_factory(n) if rep_factory else None
        checks += [r.as_dict() for r in relation_check(n, box, families=families, rep=rep)]
    return checks


def oracle_vs_hhl(max_len=4, max_size=5) -> list:
    from .daha import oracle_E
    from .hhl import hhl_E

    return [_record(hhl_E(mu) == oracle_E(mu), mu=list(mu)) for mu in _comps(max_len, max_size)]


def convergence(mus=((2,), (0, 2), (2, 2), (1, 0, 1)), m_max=3) -> list:
    from .hhl import convergence_witness

    checks = []
    for mu in mus:
        rep = convergence_witness(mu, m_max)
        vals = rep["valuations"]
        ok = rep["status"] == "pass" and all(v >= 1 for v in vals[1:])
        checks.append(_record(ok, mu=list(mu),
                              valuations=["inf" if v == float("inf") else v for v in vals]))
    return checks


def eigen(max_len=3, max_size=4, r_max=3) -> list:
    """Both routes to ``Y_r E~_mu``: the truncation limit and the rho formula."""
    from .daha import weight_alpha_tilde
    from .hhl import stable_E
    from .stablelimit import rho_formula_path, limit_Y

    checks = []
    for mu in _comps(max_len, max_size):
        E = stable_E(mu)
        alpha = weight_alpha_tilde(mu)
        for r in range(1, r_max + 1):
            a = alpha[r - 1] if r <= len(mu) else ZERO
            want = E.scale(a)
            via_trunc = limit_Y(r, E) == want
            via_rho = rho_formula_path(r, mu) == want
            checks.append(_record(via_trunc and via_rho, mu=list(mu), r=r, alpha=str(a),
                                  truncation=via_trunc, rho_formula=via_rho))
    return checks


def intertwiner(max_len=3, max_size=4) -> list:
    from .daha import weight_alpha_tilde
    from .hhl import stable_E
    from .stablelimit import limit_intertwiner

    checks = []
    for mu in _comps(max_len, max_size, min_len=2, min_size=1):
        al = weight_alpha_tilde(mu)
        for i in range(1, len(mu)):
            if mu[i - 1] <= mu[i]:
                continue
            lhs = limit_intertwiner(i, stable_E(mu))
            ok = lhs == stable_E(s_i(mu, i)).scale(al[i - 1] - al[i])
            checks.append(_record(ok, mu=list(mu), i=i))
    return checks


def pair_weights(max_len=2, max_total=3, extra=(((0,), (2,)),)) -> list:
    """``pair_weight`` against eigenvalues read off from ``Y_r`` directly.

    ``extra`` lists non-admissible pairs that are checked as well.
    """
    from .stablelimit import direct_pair_weight, is_admissible, pair_weight

    pairs = []
    for mu in _comps(max_len, max_total, min_len=0):
        if is_admissible(mu):
            for d in range(max_total - sum(mu) + 1):
                pairs += [(tuple(mu), lam) for lam in partitions(d)]
    pairs += list(extra)
    checks = []
    for mu, lam in pairs:
        a, b = pair_weight(mu, lam), direct_pair_weight(mu, lam)
        checks.append(_record(a == b, mu=list(mu), **{"lambda": list(lam)},
                              weight=[str(x) for x in a], direct=[str(x) for x in b]))
    return checks


def random_almostsym(rng: random.Random, split: int, nterms=3, max_exp=2, max_tail=3):
    from .almostsym import AlmostSym

    coeffs = ["1", "q", "1 - t", "q/(1 - t)", "2*t", "-1", "(q + t)/(1 - q*t)", "t^2"]
    terms = {}
    for _ in range(nterms):
        a = tuple(rng.randint(0, max_exp) for _ in range(split))
        lam = rng.choice(partitions(rng.randint(0, max_tail)))
        terms[(a, lam)] = qt(rng.choice(coeffs))
    return AlmostSym(split, terms)


def projection(trials=100, n_max=4, seed=0) -> list:
    """``partial_minus(n, f) == f`` for ``f`` with split ``n - 1``."""
    from .stablelimit import partial_minus

    rng = random.Random(seed)
    checks = []
    for trial in range(trials):
        n = rng.randint(1, n_max)
        f = random_almostsym(rng, n - 1)
        ok = partial_minus(n, f) == f
        checks.append(_record(ok, trial=trial, n=n, **({} if ok else {"element": str(f)})))
    return checks


def gamma(max_len=3, max_size=5) -> list:
    from .stablelimit import ProportionalityError, gamma_mu

    checks = []
    for mu in _comps(max_len, max_size):
        try:
            g = gamma_mu(mu)
        except ProportionalityError as exc:
            checks.append(_record(False, mu=list(mu), error=str(exc)))
            continue
        is_part = list(mu) == sorted(mu, reverse=True)
        checks.append(_record(bool(g) and (not is_part or g.is_one()), mu=list(mu), gamma=str(g)))
    return checks


def unitriangular(max_deg=6) -> list:
    from .stablelimit import A_in_HLP

    checks = []
    for d in range(max_deg + 1):
        for lam in partitions(d):
            h = A_in_HLP(lam)
            ok = h.coefficient(lam).is_one() and all(dominance_leq(m, lam) for m in h.terms)
            checks.append(_record(ok, **{"lambda": list(lam)}, HLP=str(h)))
    return checks


DEFAULT_BASIS_GRID = ([(0, d) for d in range(7)] + [(1, d) for d in range(5)]
                      + [(2, d) for d in range(5)] + [(3, d) for d in range(4)])


def basis(grid=DEFAULT_BASIS_GRID) -> list:
    from .stablelimit import basis_certificate

    return [basis_certificate(k, d) for k, d in grid]


def fixtures(directory=None, files=None, kinds=None) -> list:
    from .fixtures import DATA_DIR, check_file

    directory = Path(directory or DATA_DIR)
    paths = sorted(directory.glob("*.txt")) if files is None else [directory / f for f in files]
    checks = []
    for p in paths:
        checks += [c for c in check_file(p) if kinds is None or c.get("kind") in kinds]
    return checks


def run(name: str, fn, **kw) -> dict:
    t0 = time.time()
    checks = fn(**kw)
    return summarize(name, checks, time.time() - t0)
