"""The fixture store and the command line front end.

Published examples and frozen derived values live in
src/stablemac/data/*.txt, one ``kind<TAB>key<TAB>value`` per line under a
``# source:`` header.  ``check`` recomputes everything; a corrupted copy
shows up as a diff.

Run: python demos/05_fixtures_and_cli.py
"""

import shutil
import tempfile
from pathlib import Path

from stablemac.cli import main
from stablemac.fixtures import DATA_DIR, check_fixtures, diff_lines

rep = check_fixtures()
print(f"fixture store: {rep['status']} ({rep['checked']} entries)")

with tempfile.TemporaryDirectory() as tmp:
    d = Path(tmp) / "data"
    shutil.copytree(DATA_DIR, d)
    p = d / "published_pairs.txt"
    p.write_text(p.read_text(encoding="utf-8").replace("[1] ⊗ P[1,1]: 1", "[1] ⊗ P[1,1]: q"),
                 encoding="utf-8")
    bad = check_fixtures(d)
    print(f"after corrupting one entry: {bad['status']}")
    print("\n".join("  " + line for line in diff_lines(bad)))

# the CLI is also available as `stablemac ...` or `python -m stablemac ...`
for argv in (["compute", "E", "--mu", "1"],
             ["compute", "weight", "--mu", "0,2"],
             ["compute", "pair", "--mu", "1", "--lambda", "1,1"],
             ["verify", "basis", "--k", "2", "--deg", "3", "--format", "text"],
             ["dump-fillings", "--mu", "2", "--lambda", "1"]):
    print("\n$ stablemac", " ".join(argv))
    status = main(argv)
    print(f"(exit {status})")
