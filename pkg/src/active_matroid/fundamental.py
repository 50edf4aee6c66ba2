"""Fundamental bipartite graphs (tableaux) of bases, and activities on them.

A :class:`FundamentalGraph` only remembers which non-basis elements each
basis element sees.  Everything about activities and active closures is
computed from this local structure, so graphs need not come from a matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import EmptyGroundSet, MatroidError, NotABasis
from .matroid import Matroid, as_set


@dataclass(frozen=True)
class FundamentalGraph:
    """Bipartite graph on (basis, E - basis).

    ``adjacency`` maps every element of the ground set to its neighbours on
    the other side, and is kept symmetric.
    """

    ground: tuple
    basis: frozenset
    adjacency: Mapping

    def __post_init__(self):
        E = frozenset(self.ground)
        if not self.basis <= E:
            raise MatroidError("basis side is not inside the ground set")
        if set(self.adjacency) != E:
            raise MatroidError("adjacency must list every element")
        for x, nbrs in self.adjacency.items():
            on_basis = x in self.basis
            for y in nbrs:
                if y not in E or (y in self.basis) == on_basis:
                    raise MatroidError(f"edge {x}-{y} is not bipartite")
                if x not in self.adjacency[y]:
                    raise MatroidError(f"edge {x}-{y} is stored on one side only")

    @classmethod
    def from_edges(cls, ground: Iterable[int], basis: Iterable[int], edges) -> "FundamentalGraph":
        """Build a graph from (basis element, non-basis element) pairs."""
        ground = tuple(sorted(as_set(ground)))
        basis = as_set(basis)
        adj = {e: set() for e in ground}
        for b, e in edges:
            adj[b].add(e)
            adj[e].add(b)
        return cls(ground, basis, {e: frozenset(s) for e, s in adj.items()})

    def __hash__(self):
        return hash((self.ground, self.basis, frozenset(self.adjacency.items())))

    def __eq__(self, other):
        if not isinstance(other, FundamentalGraph):
            return NotImplemented
        return (self.ground == other.ground and self.basis == other.basis
                and dict(self.adjacency) == dict(other.adjacency))

    @cached_property
    def ground_set(self) -> frozenset:
        return frozenset(self.ground)

    @cached_property
    def nonbasis(self) -> frozenset:
        return self.ground_set - self.basis

    def cocircuit(self, b: int) -> frozenset:
        """C*(B;b) for a basis element."""
        return self.adjacency[b] | {b}

    def circuit(self, e: int) -> frozenset:
        """C(B;e) for a non-basis element."""
        return self.adjacency[e] | {e}

    def star(self, x: int) -> frozenset:
        """Closed neighbourhood: C*(B;x) or C(B;x) depending on the side."""
        return self.adjacency[x] | {x}

    def edges(self) -> list:
        return sorted((b, e) for b in self.basis for e in self.adjacency[b])

    @cached_property
    def internally_active(self) -> frozenset:
        return frozenset(b for b in self.basis if not any(c < b for c in self.adjacency[b]))

    @cached_property
    def externally_active(self) -> frozenset:
        return frozenset(e for e in self.nonbasis if not any(c < e for c in self.adjacency[e]))


@dataclass(frozen=True)
class ActivitySets:
    internal: frozenset
    external: frozenset

    @property
    def iota(self) -> int:
        return len(self.internal)

    @property
    def epsilon(self) -> int:
        return len(self.external)


def fundamental_graph(M: Matroid, B) -> FundamentalGraph:
    B = as_set(B)
    if B not in M.bases:
        raise NotABasis(f"{sorted(B)} is not a basis")
    edges = []
    for b in B:
        rest = B - {b}
        for e in M.ground_set - B:
            if rest | {e} in M.bases:
                edges.append((b, e))
    return FundamentalGraph.from_edges(M.ground, B, edges)


def fg_dual(F: FundamentalGraph) -> FundamentalGraph:
    """Swap the two sides; the edges are unchanged."""
    return FundamentalGraph(F.ground, F.nonbasis, F.adjacency)


def fg_remove(F: FundamentalGraph, A: Iterable[int]) -> FundamentalGraph:
    A = as_set(A)
    keep = tuple(e for e in F.ground if e not in A)
    adj = {e: F.adjacency[e] - A for e in keep}
    return FundamentalGraph(keep, F.basis - A, adj)


def fg_restrict(F: FundamentalGraph, A: Iterable[int]) -> FundamentalGraph:
    """F - (E - A)."""
    return fg_remove(F, F.ground_set - as_set(A))


def activity_sets(F: FundamentalGraph) -> ActivitySets:
    return ActivitySets(F.internally_active, F.externally_active)


def activities(M: Matroid, B) -> ActivitySets:
    """Int(B) and Ext(B) of a basis of ``M``."""
    return activity_sets(fundamental_graph(M, B))


def is_uniactive_internal(F: FundamentalGraph) -> bool:
    if not F.ground:
        raise EmptyGroundSet("uniactivity needs a nonempty ground set")
    p = F.ground[0]
    return F.internally_active == {p} and not F.externally_active


def is_uniactive_external(F: FundamentalGraph) -> bool:
    if not F.ground:
        raise EmptyGroundSet("uniactivity needs a nonempty ground set")
    p = F.ground[0]
    return F.externally_active == {p} and not F.internally_active


def render_tableau(F: FundamentalGraph) -> str:
    """Text tableau: row ``e`` has an entry in column ``b`` iff b is in C(B;e).

    Rows and columns follow label order; ``#`` marks an entry, ``.`` a zero,
    and diagonal cells are bracketed.
    """
    labels = [str(e) for e in F.ground]
    w = max((len(s) for s in labels), default=1)
    head = " " * w + " " + "".join(f" {s:^{max(w, 1)}} " for s in labels)
    lines = [head.rstrip()]
    for r, lab in zip(F.ground, labels):
        cells = []
        for c in F.ground:
            if r == c:
                cells.append("[" + "#".center(max(w, 1)) + "]")
            elif r not in F.basis and c in F.basis and c in F.adjacency[r]:
                cells.append(" " + "#".center(max(w, 1)) + " ")
            else:
                cells.append(" " + ".".center(max(w, 1)) + " ")
        lines.append((f"{lab:>{w}} " + "".join(cells)).rstrip())
    return "\n".join(lines)
