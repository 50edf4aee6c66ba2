"""Decomposition of bases into uniactive bases of minors.

Every basis B splits along its active filtration into pieces
B_k = B & (F_k - F_{k-1}) and B'_k = B & (F'_{k-1} - F'_k), each a uniactive
internal (resp. external) basis of the induced minor.  Conversely, any
connected filtration with such pieces glues back to a basis whose active
filtration is that filtration, which partitions the set of all bases.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .closure import active_filtration, internal_external_partition
from .errors import (
    ConsistencyError,
    GroundTooSmall,
    NotABasis,
    NotABijection,
    NotConnectedFiltration,
    PartNotABasisOfMinor,
    PartNotUniactive,
)
from .filtration import (
    Filtration,
    beta_product,
    enumerate_filtrations,
    compact_set,
    induced_minors,
    is_connected_filtration,
    truncate_external,
    truncate_internal,
)
from .fundamental import (
    fundamental_graph,
    is_uniactive_external,
    is_uniactive_internal,
)
from .matroid import Matroid, as_set, minor


@dataclass(frozen=True)
class BasisDecomposition:
    basis: frozenset
    filtration: Filtration
    internal_parts: tuple  # (M_k, B_k) for k = 1..iota
    external_parts: tuple  # (M'_k, B'_k) for k = 1..eps

    @property
    def internal_bases(self) -> list:
        return [b for _, b in self.internal_parts]

    @property
    def external_bases(self) -> list:
        return [b for _, b in self.external_parts]

    def pieces_in_chain_order(self) -> list:
        """B'_eps, ..., B'_1, B_1, ..., B_iota."""
        return self.external_bases[::-1] + self.internal_bases

    def text(self, unicode: bool = False, joiner: str = "+") -> str:
        """Pieces from the bottom of the chain, e.g. ``56+4+0``."""
        ground = self.filtration.ground
        return joiner.join(compact_set(p, ground, unicode)
                           for p in self.pieces_in_chain_order())


def _uniactive(N: Matroid, B: frozenset, side: str) -> bool:
    if not N.ground or B not in N.bases:
        return False
    F = fundamental_graph(N, B)
    return is_uniactive_internal(F) if side == "internal" else is_uniactive_external(F)


def decompose_basis(M: Matroid, B) -> BasisDecomposition:
    B = as_set(B)
    if B not in M.bases:
        raise NotABasis(f"{sorted(B)} is not a basis")
    f = active_filtration(fundamental_graph(M, B))
    inner_minors, outer_minors = induced_minors(M, f)
    inner = tuple((N, B & p) for N, p in zip(inner_minors, f.internal_parts()))
    outer = tuple((N, B & p) for N, p in zip(outer_minors, f.external_parts()))
    for k, (N, Bk) in enumerate(inner, 1):
        if not _uniactive(N, Bk, "internal"):
            raise ConsistencyError(f"internal piece {k} of {sorted(B)} is not uniactive")
    for k, (N, Bk) in enumerate(outer, 1):
        if not _uniactive(N, Bk, "external"):
            raise ConsistencyError(f"external piece {k} of {sorted(B)} is not uniactive")
    if not is_connected_filtration(M, f):
        raise ConsistencyError(f"active filtration of {sorted(B)} is not connected")
    return BasisDecomposition(B, f, inner, outer)


def recompose(M: Matroid, f: Filtration, internal_bases: Sequence, external_bases: Sequence) -> frozenset:
    """Glue uniactive pieces along a connected filtration into a basis of ``M``.

    ``internal_bases`` lists B_1..B_iota and ``external_bases`` B'_1..B'_eps.
    """
    if len(internal_bases) != f.iota or len(external_bases) != f.epsilon:
        raise ValueError("one piece is needed per step of the filtration")
    if not is_connected_filtration(M, f):
        raise NotConnectedFiltration(f"{f} is not a connected filtration")
    inner_minors, outer_minors = induced_minors(M, f)
    pieces = []
    for side, minors_, given in (("internal", inner_minors, internal_bases),
                                 ("external", outer_minors, external_bases)):
        for k, (N, Bk) in enumerate(zip(minors_, given), 1):
            Bk = as_set(Bk)
            if Bk not in N.bases:
                raise PartNotABasisOfMinor(k, side)
            if not _uniactive(N, Bk, side):
                raise PartNotUniactive(k, side)
            pieces.append(Bk)
    B = frozenset().union(*pieces)
    if B not in M.bases:
        raise ConsistencyError(f"glued set {sorted(B)} is not a basis")
    dec = decompose_basis(M, B)
    if dec.filtration != f:
        raise ConsistencyError("recomposed basis has a different active filtration")
    return B


def classify_all_bases(M: Matroid) -> dict:
    """Group every basis by its active filtration and check the partition."""
    groups = defaultdict(set)
    for B in M.sorted_bases():
        f = active_filtration(fundamental_graph(M, B))
        groups[f].add(B)
    seen = set()
    for f, fibre in groups.items():
        if not is_connected_filtration(M, f):
            raise ConsistencyError(f"{f} is not connected")
        if seen & fibre:
            raise ConsistencyError("fibres overlap")
        seen |= fibre
        if len(fibre) != beta_product(M, f):
            raise ConsistencyError(f"fibre of {f} has {len(fibre)} bases, "
                                   f"beta product is {beta_product(M, f)}")
    if seen != set(M.bases):
        raise ConsistencyError("fibres do not cover all bases")
    return dict(groups)


def uniactive_bases(M: Matroid) -> tuple:
    """(uniactive internal bases, uniactive external bases)."""
    internal, external = set(), set()
    for B in M.bases:
        F = fundamental_graph(M, B)
        ints, exts = F.internally_active, F.externally_active
        if len(ints) == 1 and not exts:
            internal.add(B)
        elif len(exts) == 1 and not ints:
            external.add(B)
    return frozenset(internal), frozenset(external)


def swap_min_bijection(M: Matroid) -> list:
    """Pair each uniactive internal basis with its image under swapping the two smallest elements."""
    if len(M.ground) < 2:
        raise GroundTooSmall("need at least two elements")
    p, q = M.ground[0], M.ground[1]
    internal, external = uniactive_bases(M)

    def swap(B):
        return frozenset(q if e == p else p if e == q else e for e in B)

    pairs = [(B, swap(B)) for B in sorted(internal, key=sorted)]
    images = [b for _, b in pairs]
    if set(images) != set(external) or len(set(images)) != len(images):
        raise NotABijection("swapping the two smallest elements is not a bijection here")
    return pairs


def etlv_split(M: Matroid, B) -> tuple:
    """(F_c, B & F_c, B - F_c): external basis of M(F_c), internal basis of M/F_c."""
    B = as_set(B)
    if B not in M.bases:
        raise NotABasis(f"{sorted(B)} is not a basis")
    F = fundamental_graph(M, B)
    _, Fc = internal_external_partition(F)
    ext_basis, int_basis = B & Fc, B - Fc
    upper, lower = minor(M, Fc, ()), minor(M, M.ground, Fc)
    if ext_basis not in upper.bases or int_basis not in lower.bases:
        raise ConsistencyError("split pieces are not bases of the minors")
    Fu, Fl = fundamental_graph(upper, ext_basis), fundamental_graph(lower, int_basis)
    if Fu.internally_active or Fu.externally_active != F.externally_active:
        raise ConsistencyError("external piece has the wrong activities")
    if Fl.externally_active or Fl.internally_active != F.internally_active:
        raise ConsistencyError("internal piece has the wrong activities")
    f = active_filtration(F)
    if (active_filtration(Fu) != truncate_external(f)
            or active_filtration(Fl) != truncate_internal(f)):
        raise ConsistencyError("split disagrees with the truncated active filtration")
    return Fc, ext_basis, int_basis


def satisfies_uniactive_conditions(M: Matroid, B, f: Filtration) -> bool:
    """Whether ``f`` cuts ``B`` into uniactive bases of its induced minors."""
    B = as_set(B)
    inner_minors, outer_minors = induced_minors(M, f)
    return (all(_uniactive(N, B & p, "internal")
                for N, p in zip(inner_minors, f.internal_parts()))
            and all(_uniactive(N, B & p, "external")
                    for N, p in zip(outer_minors, f.external_parts())))


def connected_filtrations(M: Matroid, max_n: int | None = None) -> list:
    return [f for f in enumerate_filtrations(M.ground, max_n) if is_connected_filtration(M, f)]
