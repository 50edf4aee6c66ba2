"""Walk through one basis of K4: tableau, activities, partition, filtration, pieces.

Run:  python3 demos/k4_walkthrough.py [basis]     (default basis 146)
"""

import sys

from active_matroid import (
    active_filtration,
    active_partition,
    decompose_basis,
    fundamental_graph,
    k4,
    render_tableau,
)
from active_matroid.io import parse_set, render_table


def main(argv):
    M = k4()
    B = parse_set(argv[1] if len(argv) > 1 else "1,4,6")
    print("K4, edges numbered 12 13 23 14 24 34 as 1..6")
    print(f"basis {sorted(B)}\n")

    F = fundamental_graph(M, B)
    print("fundamental tableau (rows: basis elements, columns: the rest)")
    print(render_tableau(F))
    print(f"\ninternally active: {sorted(F.internally_active)}")
    print(f"externally active: {sorted(F.externally_active)}")

    # the active elements each pull a block of the ground set along with them
    part = active_partition(F)
    print(f"\nactive partition: {part.text(joiner=' + ', ground=M.ground)}")
    print(f"filtration:       {active_filtration(F).text(unicode=True)}")

    dec = decompose_basis(M, B)
    print("\nthe basis cut into single-activity pieces of minors:")
    for kind, parts in (("internal", dec.internal_parts), ("external", dec.external_parts)):
        for N, b in parts:
            print(f"  {kind}: minor on {list(N.ground)}, piece {sorted(b)}")

    print("\nthe whole table:\n")
    print(render_table(M), end="")


if __name__ == "__main__":
    main(sys.argv)
