"""Small ordered matroids given by an explicit family of bases.

Elements are positive integers and the linear order is numeric order.  Sets
of elements are ``frozenset``s.  Internally every subset is also carried as
a bitmask over the sorted ground set, so that rank and minor computations
stay cheap at desk scale (a few thousand subsets, a few hundred bases).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    EmptyBases,
    ElementOnWrongSide,
    ExchangeAxiomViolation,
    MatroidError,
    MixedRank,
    NotABasis,
    NotNested,
    RankOutOfRange,
)

ElementSet = frozenset


def as_set(elements: Iterable[int]) -> frozenset:
    if isinstance(elements, frozenset):
        return elements
    return frozenset(int(e) for e in elements)


@dataclass(frozen=True)
class Matroid:
    """An ordered matroid: sorted ground set plus its bases.

    Build instances with :func:`matroid_from_bases` (validating) or the
    other constructors in this module; direct construction skips the
    exchange-axiom check.
    """

    ground: tuple
    bases: frozenset

    @cached_property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    @cached_property
    def ground_set(self) -> frozenset:
        return frozenset(self.ground)

    @cached_property
    def _bit(self) -> dict:
        return {e: 1 << i for i, e in enumerate(self.ground)}

    def mask(self, elements: Iterable[int]) -> int:
        bit = self._bit
        m = 0
        for e in elements:
            m |= bit[e]
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.ground) if m >> i & 1)

    @cached_property
    def basis_masks(self) -> frozenset:
        return frozenset(self.mask(b) for b in self.bases)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def rank_mask(self, m: int) -> int:
        return max((b & m).bit_count() for b in self.basis_masks)

    def is_basis(self, elements: Iterable[int]) -> bool:
        return frozenset(elements) in self.bases

    def sorted_bases(self) -> list:
        return sorted(self.bases, key=sorted)

    def __len__(self) -> int:
        return len(self.ground)

    def __repr__(self) -> str:
        return f"Matroid(n={len(self.ground)}, r={self.rank}, bases={len(self.bases)})"


def _check(ground: tuple, bases: frozenset) -> None:
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {len(b) for b in bases}
    if len(sizes) > 1:
        raise MixedRank(f"bases have different sizes {sorted(sizes)}")
    gs = frozenset(ground)
    for b in bases:
        if not b <= gs:
            raise MatroidError(f"basis {sorted(b)} is not inside the ground set")
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            for x in b1 - b2:
                rest = b1 - {x}
                if not any(rest | {y} in bases for y in b2 - b1):
                    raise ExchangeAxiomViolation(b1, b2, x)


def matroid_from_bases(ground: Iterable[int], bases: Iterable[Iterable[int]],
                       check: bool = True) -> Matroid:
    """Build a matroid on ``ground`` from its bases, verifying the axioms."""
    g = tuple(sorted(set(int(e) for e in ground)))
    if any(e <= 0 for e in g):
        raise MatroidError("element labels must be positive integers")
    bs = frozenset(as_set(b) for b in bases)
    if check:
        _check(g, bs)
    elif not bs:
        raise EmptyBases("a matroid needs at least one basis")
    return Matroid(g, bs)


def _forest_rank(vertex_count: int, edges) -> int:
    parent = list(range(vertex_count + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    r = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            r += 1
    return r


def graphic_matroid(vertex_count: int, edges) -> Matroid:
    """Cycle matroid of a multigraph; element ``i`` is the ``i``-th edge.

    Vertices are ``1..vertex_count``.  Self-loops and parallel edges are
    allowed; a disconnected graph gives spanning forests as bases.
    """
    edges = [(int(u), int(v)) for u, v in edges]
    for u, v in edges:
        if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
            raise MatroidError(f"edge ({u}, {v}) uses an unknown vertex")
    r = _forest_rank(vertex_count, edges)
    labels = range(1, len(edges) + 1)
    bases = []
    for combo in combinations(labels, r):
        if _forest_rank(vertex_count, [edges[i - 1] for i in combo]) == r:
            bases.append(frozenset(combo))
    return Matroid(tuple(labels), frozenset(bases))


def uniform_matroid(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise RankOutOfRange(f"need 0 <= r <= n, got r={r}, n={n}")
    ground = tuple(range(1, n + 1))
    return Matroid(ground, frozenset(frozenset(c) for c in combinations(ground, r)))


def dual(M: Matroid) -> Matroid:
    E = M.ground_set
    return Matroid(M.ground, frozenset(E - b for b in M.bases))


def relabel(M: Matroid, mapping: dict) -> Matroid:
    """Rename elements through ``mapping`` (old label -> new label)."""
    ground = tuple(sorted(mapping[e] for e in M.ground))
    return Matroid(ground, frozenset(frozenset(mapping[e] for e in b) for b in M.bases))


def rank(M: Matroid, A: Iterable[int]) -> int:
    return M.rank_mask(M.mask(A))


def minor(M: Matroid, G: Iterable[int], F: Iterable[int] = ()) -> Matroid:
    """The minor M(G)/F: restrict to ``G``, then contract ``F``.

    Its bases are the sets B & (G - F) for bases B of M meeting G in a
    basis of M(G) and F in a basis of M(F).
    """
    G, F = as_set(G), as_set(F)
    if not F <= G:
        raise NotNested(f"{sorted(F)} is not a subset of {sorted(G)}")
    if not G <= M.ground_set:
        raise NotNested("restriction set is not inside the ground set")
    gm, fm = M.mask(G), M.mask(F)
    return M.__class__(*_minor_masks(M, gm, fm))


def _minor_masks(M: Matroid, gm: int, fm: int):
    rg, rf = M.rank_mask(gm), M.rank_mask(fm)
    keep = gm & ~fm
    kept = [b & keep for b in M.basis_masks
            if (b & gm).bit_count() == rg and (b & fm).bit_count() == rf]
    ground = tuple(sorted(M.unmask(keep)))
    return ground, frozenset(M.unmask(k) for k in set(kept))


def restriction(M: Matroid, G: Iterable[int]) -> Matroid:
    return minor(M, G, ())


def contraction(M: Matroid, F: Iterable[int]) -> Matroid:
    return minor(M, M.ground, F)


def deletion(M: Matroid, A: Iterable[int]) -> Matroid:
    return minor(M, M.ground_set - as_set(A), ())


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    """Disjoint union; ``N`` is shifted past the largest label of ``M``."""
    shift = max(M.ground, default=0)
    Ns = relabel(N, {e: e + shift for e in N.ground})
    return Matroid(M.ground + Ns.ground,
                   frozenset(a | b for a in M.bases for b in Ns.bases))


def is_independent(M: Matroid, A: Iterable[int]) -> bool:
    m = M.mask(A)
    return M.rank_mask(m) == m.bit_count()


def circuits(M: Matroid) -> frozenset:
    """All minimal dependent sets, found by exhaustive search."""
    n = len(M.ground)
    found = []
    for m in sorted(range(1, 1 << n), key=int.bit_count):
        if any(c & m == c for c in found):
            continue
        if M.rank_mask(m) < m.bit_count():
            found.append(m)
    return frozenset(M.unmask(c) for c in found)


def cocircuits(M: Matroid) -> frozenset:
    return circuits(dual(M))


def _check_basis(M: Matroid, B) -> frozenset:
    B = as_set(B)
    if B not in M.bases:
        raise NotABasis(f"{sorted(B)} is not a basis")
    return B


def fundamental_circuit(M: Matroid, B, e: int) -> frozenset:
    """C(B;e): the unique circuit inside B + e, for e outside B."""
    B = _check_basis(M, B)
    if e in B or e not in M.ground_set:
        raise ElementOnWrongSide(f"{e} must be a non-basis element")
    return frozenset({e}) | {b for b in B if (B - {b}) | {e} in M.bases}


def fundamental_cocircuit(M: Matroid, B, b: int) -> frozenset:
    """C*(B;b): the unique cocircuit inside (E - B) + b, for b in B."""
    B = _check_basis(M, B)
    if b not in B:
        raise ElementOnWrongSide(f"{b} must be a basis element")
    rest = B - {b}
    return frozenset({b}) | {e for e in M.ground_set - B if rest | {e} in M.bases}


def is_connected(M: Matroid) -> bool:
    """True unless some proper nonempty A has r(A) + r(E - A) = r(E).

    Matroids with at most one element count as connected.
    """
    n = len(M.ground)
    if n <= 1:
        return True
    full, r = M.full_mask, M.rank
    # every separator pair has a side containing the first element
    for m in range(1, 1 << n, 2):
        if m == full:
            continue
        if M.rank_mask(m) + M.rank_mask(full & ~m) == r:
            return False
    return True


def is_flat(M: Matroid, F) -> bool:
    m = M.mask(F)
    r = M.rank_mask(m)
    return all(M.rank_mask(m | bit) > r
               for e, bit in M._bit.items() if not m & bit)


def is_dual_flat(M: Matroid, F) -> bool:
    """F is a union of circuits, i.e. M(F) has no isthmus."""
    m = M.mask(F)
    r = M.rank_mask(m)
    return all(M.rank_mask(m & ~bit) == r for e, bit in M._bit.items() if m & bit)


def is_cyclic_flat(M: Matroid, F) -> bool:
    return is_flat(M, F) and is_dual_flat(M, F)


def cyclic_flats(M: Matroid) -> frozenset:
    n = len(M.ground)
    return frozenset(M.unmask(m) for m in range(1 << n)
                     if is_cyclic_flat(M, M.unmask(m)))


def is_loop(M: Matroid) -> bool:
    return len(M.ground) == 1 and M.rank == 0


def is_isthmus(M: Matroid) -> bool:
    return len(M.ground) == 1 and M.rank == 1


def subsets(elements) -> list:
    """Every subset of ``elements`` as a frozenset, smallest first."""
    items = sorted(elements)
    return [frozenset(c) for k in range(len(items) + 1)
            for c in combinations(items, k)]
