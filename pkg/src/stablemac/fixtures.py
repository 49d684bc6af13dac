"""Fixture store: hand-transcribed published values plus frozen derived ones.

Each file is UTF-8 text.  The first line is a provenance header
``# source: PUBLISHED ...`` or ``# source: DERIVED <oracle>``; the remaining
non-comment lines are ``kind<TAB>key<TAB>value``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .almostsym import format_almostsym, parse_almostsym
from .combinat import compositions, partitions
from .hhl import stable_E
from .qt import qt

DATA_DIR = Path(__file__).parent / "data"


def key_to_comp(key: str) -> tuple:
    key = key.strip()
    if key in ("", "empty", "∅"):
        return ()
    return tuple(int(x) for x in key.split(","))


def comp_to_key(mu) -> str:
    return ",".join(map(str, mu)) if len(mu) else "empty"


def pair_key(mu, lam) -> str:
    return f"{comp_to_key(mu)}|{comp_to_key(lam)}"


def parse_pair_key(key: str):
    a, _, b = key.partition("|")
    return key_to_comp(a), key_to_comp(b)


def weight_list(values) -> list:
    """Drop trailing zeros; scalars as canonical strings."""
    vals = [str(v) for v in values]
    while vals and vals[-1] == "0":
        vals.pop()
    return vals


# ---------------------------------------------------------------------------
# computing the canonical value of a fixture entry
# ---------------------------------------------------------------------------

def _canon_published(kind: str, key: str, value: str):
    """Return ``(expected, actual)`` canonical strings for a published entry."""
    from .stablelimit import hlp_text, pair_weight, parse_hlp_text, stable_E_pair

    if kind == "stableE":
        mu = key_to_comp(key)
        return format_almostsym(parse_almostsym(value)), format_almostsym(stable_E(mu))
    if kind == "pair":
        mu, lam = parse_pair_key(key)
        expected = parse_hlp_text(value)
        k = int(value.split(";")[0].split("=")[1])
        return hlp_text(expected, k), hlp_text(stable_E_pair(mu, lam), k)
    if kind == "pairweight":
        mu, lam = parse_pair_key(key)
        expected = json.dumps([str(qt(v)) for v in json.loads(value)])
        return expected, json.dumps(weight_list(pair_weight(mu, lam)))
    raise ValueError(f"unknown published fixture kind {kind!r}")


def _derived_value(kind: str, key: str) -> str:
    from .daha import oracle_E, weight_alpha_tilde
    from .stablelimit import A_in_HLP, gamma_mu

    if kind == "oracleE":
        return str(oracle_E(key_to_comp(key)))
    if kind == "gamma":
        return str(gamma_mu(key_to_comp(key)))
    if kind == "A":
        return str(A_in_HLP(key_to_comp(key)))
    if kind == "weight":
        return json.dumps(weight_list(weight_alpha_tilde(key_to_comp(key))))
    raise ValueError(f"unknown derived fixture kind {kind!r}")


# what freeze writes: file name -> (oracle label, kind, keys)
def _derived_registry() -> dict:
    small = [mu for n in range(1, 4) for d in range(0, 4) for mu in compositions(d, n)]
    nonpart = [mu for n in range(2, 4) for d in range(1, 5) for mu in compositions(d, n)
               if list(mu) != sorted(mu, reverse=True)]
    return {
        "derived_oracle_E.txt": ("eigen-oracle", "oracleE", [comp_to_key(m) for m in small]),
        "derived_gamma.txt": ("gamma_mu", "gamma", [comp_to_key(m) for m in nonpart]),
        "derived_A.txt": ("A_function HLP expansion", "A",
                          [comp_to_key(l) for d in range(1, 5) for l in partitions(d)]),
        "derived_weights.txt": ("weight formula", "weight", [comp_to_key(m) for m in small]),
    }


# ---------------------------------------------------------------------------
# reading, checking, freezing
# ---------------------------------------------------------------------------

@dataclass
class FixtureFile:
    path: Path
    source: str
    entries: list = field(default_factory=list)  # (lineno, kind, key, value)

    @property
    def published(self) -> bool:
        return self.source.startswith("PUBLISHED")


def read_fixture(path: Path) -> FixtureFile:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("# source: "):
        raise ValueError(f"{path}: missing provenance header")
    ff = FixtureFile(Path(path), lines[0][len("# source: "):].strip())
    for no, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{no}: expected kind<TAB>key<TAB>value")
        ff.entries.append((no, *parts))
    return ff


def check_file(path: Path) -> list:
    """Check records for every entry of one fixture file."""
    path = Path(path)
    try:
        ff = read_fixture(path)
    except (OSError, ValueError) as exc:
        return [{"file": path.name, "line": 1, "status": "fail", "error": str(exc)}]
    results = []
    for no, kind, key, value in ff.entries:
        item = {"file": path.name, "line": no, "kind": kind, "key": key}
        try:
            if ff.published:
                expected, actual = _canon_published(kind, key, value)
            else:
                expected, actual = value, _derived_value(kind, key)
        except Exception as exc:  # a broken entry is a failed check
            item.update(status="fail", error=f"{type(exc).__name__}: {exc}")
            results.append(item)
            continue
        if expected == actual:
            item["status"] = "pass"
        else:
            item.update(status="fail", expected=expected, actual=actual)
        results.append(item)
    return results


def check_fixtures(directory: Path | None = None) -> dict:
    """Compare every stored entry with a fresh computation."""
    directory = Path(directory or DATA_DIR)
    results = []
    for path in sorted(directory.glob("*.txt")):
        results += check_file(path)
    ok = bool(results) and all(r["status"] == "pass" for r in results)
    return {"directory": str(directory), "checked": len(results),
            "status": "pass" if ok else "fail",
            "failures": [r for r in results if r["status"] != "pass"]}


def freeze_fixtures(directory: Path | None = None, only=None) -> list:
    """(Re)write the derived fixture files; published files are never touched."""
    directory = Path(directory or DATA_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (oracle, kind, keys) in _derived_registry().items():
        if only and name not in only:
            continue
        lines = [f"# source: DERIVED {oracle}"]
        for key in keys:
            lines.append(f"{kind}\t{key}\t{_derived_value(kind, key)}")
        (directory / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
        written.append(name)
    return written


def diff_lines(report: dict) -> list:
    out = []
    for f in report["failures"]:
        where = f"{f['file']}:{f['line']}"
        if "error" in f:
            out.append(f"{where}: {f['error']}")
        else:
            out.append(f"{where}: {f['kind']} {f['key']}")
            out.append(f"  - {f['expected']}")
            out.append(f"  + {f['actual']}")
    return out
