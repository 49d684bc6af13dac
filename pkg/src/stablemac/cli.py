"""Command line front end: ``python -m stablemac <command> ...``.

Exit status is 0 when everything requested passed, 1 when a check failed
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import fixtures as fx
from . import verify as V

# caps keep a typo from starting an exponential run
CAPS = {"n": 4, "box": 3, "max_size": 6, "max_len": 4, "m": 6, "k": 3, "deg": 6, "trials": 500}


class UsageError(Exception):
    pass


def parse_comp(text: str | None, what="--mu") -> tuple:
    if text is None:
        raise UsageError(f"{what} is required")
    text = text.strip()
    if text == "empty":
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"invalid composition {text!r} for {what}") from None
    if any(p < 0 for p in parts):
        raise UsageError(f"negative part in {what}")
    return parts


def parse_partition(text: str | None, what="--lambda") -> tuple:
    lam = parse_comp(text, what) if text is not None else ()
    if list(lam) != sorted(lam, reverse=True) or any(p == 0 for p in lam):
        raise UsageError(f"{what} must be a partition (weakly decreasing positive parts)")
    return lam


def parse_box(text: str) -> tuple:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--box expects LO..HI, got {text!r}") from None
    if lo > hi or max(abs(lo), abs(hi)) > CAPS["box"]:
        raise UsageError(f"--box {text} out of range (|bounds| <= {CAPS['box']})")
    return lo, hi


def _cap(name, value):
    if value is None:
        return value
    if value < 0 or value > CAPS[name]:
        raise UsageError(f"--{name.replace('_', '-')} {value} out of range (0..{CAPS[name]})")
    return value


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def cmd_compute(args) -> tuple:
    from .almostsym import almostsym_json
    from .daha import weight_alpha_tilde
    from .hhl import hhl_E, stable_E
    from .stablelimit import (A_in_HLP, hlp_text, pair_weight, pretty_hlp,
                              stable_E_pair)
    from .symfunc import hall_littlewood_P

    kind, fmt = args.kind, args.format
    if kind == "E":
        mu = parse_comp(args.mu)
        p = hhl_E(mu)
        if fmt == "json":
            return 0, json.dumps({"mu": list(mu), "nvars": p.nvars,
                                  "terms": [{"x": list(e), "coeff": str(c)}
                                            for e, c in sorted(p.terms.items(), reverse=True)]})
        return 0, str(p)
    if kind == "stableE":
        f = stable_E(parse_comp(args.mu))
        if fmt == "json":
            return 0, json.dumps(almostsym_json(f), ensure_ascii=False)
        return 0, f.pretty() if fmt == "text" else str(f)
    if kind == "pair":
        mu, lam = parse_comp(args.mu), parse_partition(args.lam)
        f = stable_E_pair(mu, lam)
        if fmt == "json":
            return 0, json.dumps({"mu": list(mu), "lambda": list(lam),
                                  "hlp": hlp_text(f), **almostsym_json(f)}, ensure_ascii=False)
        return 0, pretty_hlp(f)
    if kind == "A":
        lam = parse_partition(args.lam)
        s = A_in_HLP(lam)
        if fmt == "json":
            return 0, json.dumps({"lambda": list(lam), "HLP": _symfunc_items(s)})
        return 0, str(s)
    if kind == "HLP":
        lam = parse_partition(args.lam)
        s = hall_littlewood_P(lam)
        if fmt == "json":
            return 0, json.dumps({"lambda": list(lam), "m": _symfunc_items(s)})
        return 0, str(s)
    if kind == "weight":
        mu = parse_comp(args.mu)
        if args.lam is not None:
            vals = pair_weight(mu, parse_partition(args.lam))
        else:
            vals = weight_alpha_tilde(mu)
        sparse = [(i, str(v)) for i, v in enumerate(vals, start=1) if v]
        if fmt == "json":
            return 0, json.dumps(sparse)
        return 0, "[" + ", ".join(f'({i}, "{v}")' for i, v in sparse) + "]"
    raise UsageError(f"unknown object {kind!r}")


def _symfunc_items(s):
    return [{"lambda": list(lam), "coeff": str(c)}
            for lam, c in sorted(s.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _opt(args, name, default):
    v = getattr(args, name, None)
    return _cap(name, v if v is not None else default)


def _suite_daha(args):
    ns = [_cap("n", args.n)] if args.n else [2, 3, 4]
    if min(ns) < 2:
        raise UsageError("--n must be at least 2")
    box = parse_box(args.box) if args.box else (-2, 3)
    return V.daha_relations(ns, box)


def _suite_basis(args):
    if args.k is None and args.deg is None:
        return V.basis()
    return V.basis([(_opt(args, "k", 2), _opt(args, "deg", 3))])


SUITES = {
    "daha-relations": _suite_daha,
    "oracle-vs-hhl": lambda a: V.oracle_vs_hhl(_opt(a, "max_len", 4), _opt(a, "max_size", 5)),
    "convergence": lambda a: V.convergence(**({"mus": [parse_comp(a.mu)]} if a.mu else {}),
                                           m_max=_opt(a, "m", 3)),
    "eigen": lambda a: V.eigen(_opt(a, "max_len", 3), _opt(a, "max_size", 4)),
    "intertwiner": lambda a: V.intertwiner(_opt(a, "max_len", 3), _opt(a, "max_size", 4)),
    "pair-weights": lambda a: V.pair_weights(_opt(a, "max_len", 2), _opt(a, "max_size", 3)),
    "projection": lambda a: V.projection(_opt(a, "trials", 100), _opt(a, "n", 4), a.seed),
    "gamma": lambda a: V.gamma(_opt(a, "max_len", 3), _opt(a, "max_size", 5)),
    "unitriangular": lambda a: V.unitriangular(_opt(a, "deg", 6)),
    "basis": _suite_basis,
}


def cmd_verify(args) -> tuple:
    report = V.run(args.suite, lambda: SUITES[args.suite](args))
    ok = report["status"] == "pass"
    if args.format == "text":
        lines = [f"{args.suite}: {report['status']} ({report['checked']} checks, {report['seconds']}s)"]
        lines += [json.dumps(c, ensure_ascii=False) for c in report["failures"]]
        return (0 if ok else 1), "\n".join(lines)
    del report["failures"]
    return (0 if ok else 1), json.dumps(report, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# fixtures, fillings
# ---------------------------------------------------------------------------

def cmd_fixtures(args) -> tuple:
    directory = Path(args.dir) if args.dir else None
    if args.action == "freeze":
        written = fx.freeze_fixtures(directory)
        return 0, "\n".join(f"wrote {name}" for name in written)
    report = fx.check_fixtures(directory)
    if args.format == "json":
        return (0 if report["status"] == "pass" else 1), json.dumps(report, indent=2, ensure_ascii=False)
    lines = [f"fixtures: {report['status']} ({report['checked']} entries)"] + fx.diff_lines(report)
    return (0 if report["status"] == "pass" else 1), "\n".join(lines)


def cmd_dump_fillings(args) -> tuple:
    from .hhl import enumerate_fillings

    mu = parse_comp(args.mu)
    lam = parse_partition(args.lam) if args.lam is not None else None
    n = len(mu)
    if lam is not None:
        shape = mu + (0,) * len(lam)
        N = n + len(lam)
        need = {n + i + 1: lam[i] for i in range(len(lam))}
        limit = True
    else:
        shape, N, need, limit = mu, (args.n if args.n is not None else n), None, args.limit
    if N < len(shape):
        raise UsageError("--n must be at least the number of columns")
    rows = list(enumerate_fillings(shape, N, need))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["cells", "maj", "coinv", "gamma", "contribution"])
        for f in rows:
            cells = " ".join(f"({i},{j}):{a}" for (i, j), a in sorted(f.labels))
            w.writerow([cells, f.maj, f.coinv, str(f.gamma(limit)), str(f.contribution(limit))])
        return 0, buf.getvalue().rstrip("\n")
    return 0, "\n".join(f.dump(limit) for f in rows)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stablemac",
                                description="Nonsymmetric Macdonald polynomials and their stable limits.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", help="write output to this file")

    c = sub.add_parser("compute", help="compute one object")
    c.add_argument("kind", choices=["E", "stableE", "pair", "A", "HLP", "weight"])
    c.add_argument("--mu")
    c.add_argument("--lambda", dest="lam")
    common(c, ("text", "json", "canonical"))

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    for flag in ("--n", "--m", "--k", "--deg", "--max-size", "--max-len", "--trials"):
        v.add_argument(flag, type=int)
    v.add_argument("--mu")
    v.add_argument("--box")
    v.add_argument("--seed", type=int, default=0)
    common(v, ("json", "text"))

    f = sub.add_parser("fixtures", help="check or freeze the fixture store")
    f.add_argument("action", choices=["check", "freeze"])
    f.add_argument("--dir")
    common(f)

    d = sub.add_parser("dump-fillings", help="list non-attacking fillings")
    d.add_argument("--mu")
    d.add_argument("--n", type=int, help="alphabet size (default: number of columns)")
    d.add_argument("--lambda", dest="lam", help="tail multiplicities; implies the limit weights")
    d.add_argument("--limit", action="store_true", help="use the limit weight for row-1 cells")
    common(d, ("text", "csv"))
    return p


def _glue_box(argv):
    # "--box -1..2" would otherwise look like an option to argparse
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--box" and i + 1 < len(argv):
            out.append(f"--box={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = _glue_box(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"compute": cmd_compute, "verify": cmd_verify,
                "fixtures": cmd_fixtures, "dump-fillings": cmd_dump_fillings}
    try:
        status, text = handlers[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"stablemac: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
