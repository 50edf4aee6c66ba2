"""Decompose every basis of a matroid and group the bases by filtration.

Each connected filtration collects as many bases as the product of the beta
invariants of its minors; together they account for every basis.

Run:  python3 demos/all_decompositions.py            (K4)
      python3 demos/all_decompositions.py 2 5        (uniform matroid U(2,5))
"""

import sys

from active_matroid import (
    beta_product,
    classify_all_bases,
    enumerate_filtrations,
    is_connected_filtration,
    k4,
    uniform_matroid,
)
from active_matroid.filtration import compact_set

M = uniform_matroid(int(sys.argv[1]), int(sys.argv[2])) if len(sys.argv) == 3 else k4()
groups = classify_all_bases(M)

total = 0
for f in enumerate_filtrations(M.ground):
    if not is_connected_filtration(M, f):
        continue
    bases = sorted(groups.get(f, ()), key=sorted)
    total += len(bases)
    shown = " ".join(compact_set(B, M.ground) for B in bases)
    print(f"{f.text(unicode=True):24} beta product {beta_product(M, f)}:  {shown}")

print(f"\n{total} bases over {len(groups)} connected filtrations")
