"""The active closure only needs a bipartite graph, not a matroid.

We draw a small basis/non-basis graph by hand and close up sets of internally
active elements with the three algorithms in the library.

Run:  python3 demos/closure_on_a_bipartite_graph.py
"""

from itertools import combinations

from active_matroid import FundamentalGraph, acl_ext, acl_int, internal_external_partition
from active_matroid.closure import acl_basis_sweep, acl_fixed_point, acl_single_pass

# basis {2, 4, 5}, non-basis {1, 3, 6}; 1 is externally active, 4 and 5 internally
F = FundamentalGraph.from_edges(
    ground=range(1, 7),
    basis=[2, 4, 5],
    edges=[(2, 1), (2, 3), (4, 6), (5, 6)],
)

print(f"internally active: {sorted(F.internally_active)}")
print(f"externally active: {sorted(F.externally_active)}\n")

ints = sorted(F.internally_active)
for k in range(len(ints) + 1):
    for X in map(frozenset, combinations(ints, k)):
        a = acl_int(F, X)
        assert a == acl_single_pass(F, X) == acl_fixed_point(F, X) == acl_basis_sweep(F, X)
        print(f"closure of {sorted(X)!s:8} = {sorted(a)}")

internal, external = internal_external_partition(F)
print(f"\nclosure of Int: {sorted(internal)}")
print(f"closure of Ext: {sorted(external)}  (same as {sorted(acl_ext(F, F.externally_active))})")
