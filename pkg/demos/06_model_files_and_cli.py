"""
Model files and the command line
================================

Logics, states, conditional states, s-maps and observables all live in
one plain-text format.  The command line validates, converts, and
reports statistics on such files; this script drives it in-process.
"""

import tempfile
from pathlib import Path

from qlogic import cli

MODEL = """\
# two incompatible yes/no questions
[logic]
elements 0 1 a a' b b'
complement a a'
complement b b'

[smap p]             # one entry per line: p(row, column)
a  , a  = 0.4
a  , a' = 0
a  , b  = 0.12
a  , b' = 0.28
a' , a  = 0
a' , a' = 0.6
a' , b  = 0.18
a' , b' = 0.42
b  , a  = 0.08
b  , a' = 0.22
b  , b  = 0.3
b  , b' = 0
b' , a  = 0.32
b' , a' = 0.38
b' , b  = 0
b' , b' = 0.7

[observable x]
-1 -> a
1  -> a'

[observable y]
0 -> b
5 -> b'
"""

# rows and columns against the bounds 0 and 1 may be left out: they
# follow from additivity over a complement pair, and are checked
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp, "model.qlm")
    path.write_text(MODEL)

    print("$ qlogic validate model.qlm")
    code = cli.main(["validate", str(path)])
    print(f"(exit {code})")

    # the s-map determines a conditional state wherever the diagonal
    # is positive
    print()
    print("$ qlogic derive model.qlm --from smap --name p")
    code = cli.main(["derive", str(path), "--from", "smap", "--name", "p"])
    print(f"(exit {code})")

    # joint tables, moments, covariance matrix, correlations, and the
    # independence verdicts, with a machine-readable block at the end
    print()
    print("$ qlogic stats model.qlm --smap p --x x --y y")
    code = cli.main(["stats", str(path), "--smap", "p", "--x", "x", "--y", "y"])
    print(f"(exit {code})")
