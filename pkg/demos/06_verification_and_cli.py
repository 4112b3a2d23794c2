"""The cross-check layer and the command line, end to end.

Each report pits two independently built objects against each other,
so a pass carries real information.  The same checks back the krfl
executable; this script drives the CLI through its Python entry point
to keep everything in one process.
"""

import os
import tempfile

from krfl.cli import main
from krfl.verify import (
    suite_ok,
    verify_dim,
    verify_lemma_length,
    verify_main,
    verify_point_independence,
)

print("== one case, all angles ==")
n, i, xi = 2, 1, (2, 1)
for rep in [
    verify_main(n, i, xi),
    verify_dim(n, i, xi),
    verify_point_independence(n, i, xi, trials=3, seed=1),
    verify_lemma_length(n, samples=25, seed=1),
]:
    print(f"{rep.name}: {rep.status}")

print()
print("== the same case through the CLI ==")
code = main([
    "verify-main", "--rank", "2", "--node", "1", "--partition", "2,1",
    "--format", "table",
])
print("exit code", code)

print()
print("== a character table ==")
main(["char", "--rank", "2", "--weight", "1,1", "--format", "table"])

print()
print("== characters cache to disk keyed by their request ==")
with tempfile.TemporaryDirectory() as tmp:
    os.environ["KRFL_CACHE_DIR"] = tmp
    main(["fusion", "--rank", "1", "--node", "1", "--partition", "3,1",
          "--format", "csv"])
    print("cache entries:", len(os.listdir(tmp)))
    os.environ.pop("KRFL_CACHE_DIR")

print()
print("== a skip is reported, never silently passed ==")
big = verify_main(3, 2, (4, 4, 4, 4))
print(f"{big.name}: {big.status}  ({big.details[0]['check']})")
print("suite_ok treats skips as non-failures:", suite_ok([big]))
