"""The Tutte polynomial computed four independent ways, on a few matroids.

Run:  python3 demos/tutte_four_ways.py
"""

import time

from active_matroid import (
    beta,
    beta_star,
    dual,
    graphic_matroid,
    k4,
    tutte_by_activities,
    tutte_by_filtrations,
    tutte_convolution,
    tutte_rank_nullity,
    uniform_matroid,
)

METHODS = [
    ("basis activities", tutte_by_activities),
    ("rank-nullity sum", tutte_rank_nullity),
    ("filtration sum", tutte_by_filtrations),
    ("cyclic flat convolution", tutte_convolution),
]

EXAMPLES = [
    ("K4", k4()),
    ("U(2,4)", uniform_matroid(2, 4)),
    ("triangle with a doubled edge", graphic_matroid(3, [(1, 2), (1, 2), (2, 3), (1, 3)])),
    ("dual of K4", dual(k4())),
]

for name, M in EXAMPLES:
    print(f"{name}: {len(M.ground)} elements, rank {M.rank}, {len(M.bases)} bases")
    values = set()
    for label, fn in METHODS:
        start = time.perf_counter()
        t = fn(M)
        ms = 1000 * (time.perf_counter() - start)
        values.add(t)
        print(f"  {label:24} {t}   ({ms:.1f} ms)")
    assert len(values) == 1
    print(f"  beta = {beta(M)}, beta* = {beta_star(M)}\n")
