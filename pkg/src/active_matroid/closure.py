"""Active closure of internally/externally active elements.

Three constructions of the closure are provided and, by default, checked
against each other on every call:

* :func:`acl_fixed_point` iterates the one-step extension until it stops
  growing;
* :func:`acl_single_pass` decides membership of each element in one pass
  over the ground set in increasing order;
* :func:`acl_basis_sweep` walks the basis elements in increasing order and
  absorbs whole fundamental cocircuits.

The active filtration and active partition of a fundamental graph are built
on top of these.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConsistencyError, NotExternallyActive, NotInternallyActive
from .filtration import Filtration, compact_set
from .fundamental import FundamentalGraph, fg_dual
from .matroid import as_set

CROSS_CHECK = True


def _lower(F: FundamentalGraph, x: int) -> frozenset:
    """C*(B;x)^< or C(B;x)^<: neighbours smaller than ``x``."""
    return frozenset(c for c in F.adjacency[x] if c < x)


def acl_step(F: FundamentalGraph, X: frozenset) -> frozenset:
    """One application of the extension map."""
    out = set(X)
    for b in X & F.basis:
        out |= F.adjacency[b]
    for b in F.basis - X:
        low = _lower(F, b)
        if low and low <= X:
            out.add(b)
    return frozenset(out)


def acl_fixed_point(F: FundamentalGraph, X) -> frozenset:
    A = as_set(X)
    # at most |E| rounds before the set stops growing
    while True:
        nxt = acl_step(F, A)
        if nxt == A:
            return A
        A = nxt


def acl_single_pass(F: FundamentalGraph, X) -> frozenset:
    X = as_set(X)
    active = F.internally_active
    acl = set()
    for e in F.ground:
        if e in X:
            acl.add(e)
        elif e in F.basis:
            if e not in active and _lower(F, e) <= acl:
                acl.add(e)
        elif any(c in acl for c in _lower(F, e)):
            acl.add(e)
    return frozenset(acl)


def acl_basis_sweep(F: FundamentalGraph, X) -> frozenset:
    X = as_set(X)
    acl = set()
    for b in sorted(F.basis):
        low = _lower(F, b)
        if b in X or (low and low <= acl):
            acl |= F.cocircuit(b)
    return frozenset(acl)


def acl_int(F: FundamentalGraph, X: Iterable[int] = (), *, cross_check: bool | None = None) -> frozenset:
    """Active closure of a set of internally active elements."""
    X = as_set(X)
    for x in sorted(X):
        if x not in F.internally_active:
            raise NotInternallyActive(x)
    result = acl_single_pass(F, X)
    if CROSS_CHECK if cross_check is None else cross_check:
        a, b = acl_fixed_point(F, X), acl_basis_sweep(F, X)
        if not result == a == b:
            raise ConsistencyError(
                f"closure algorithms disagree on X={sorted(X)}: "
                f"pass={sorted(result)} fixed={sorted(a)} sweep={sorted(b)}"
            )
    return result


def acl_ext(F: FundamentalGraph, X: Iterable[int] = (), *, cross_check: bool | None = None) -> frozenset:
    """Active closure of a set of externally active elements (closure in the dual)."""
    X = as_set(X)
    for x in sorted(X):
        if x not in F.externally_active:
            raise NotExternallyActive(x)
    return acl_int(fg_dual(F), X, cross_check=cross_check)


def internal_external_partition(F: FundamentalGraph, *, cross_check: bool | None = None) -> tuple:
    """(internal part, external part) of the ground set, by one increasing pass."""
    internal, external = set(), set()
    for e in F.ground:
        low = _lower(F, e)
        if e in F.basis:
            (external if low & external else internal).add(e)
        else:
            (internal if low & internal else external).add(e)
    internal, external = frozenset(internal), frozenset(external)
    if CROSS_CHECK if cross_check is None else cross_check:
        ai = acl_int(F, F.internally_active, cross_check=True)
        ae = acl_ext(F, F.externally_active, cross_check=True)
        if ai != internal or ae != external:
            raise ConsistencyError("single-pass internal/external split disagrees with closures")
    return internal, external


def active_filtration(F: FundamentalGraph) -> Filtration:
    E = F.ground_set
    a = sorted(F.internally_active)
    ap = sorted(F.externally_active)
    iota, eps = len(a), len(ap)
    inner = [E - acl_int(F, a[k:]) for k in range(iota)] + [E]
    outer = [acl_ext(F, ap[k:]) for k in range(eps)] + [frozenset()]
    # stored bottom-up: F'_eps .. F'_0
    return Filtration(F.ground, tuple(reversed(outer)), tuple(inner))


@dataclass(frozen=True)
class ActivePartition:
    """Parts keyed by active elements, listed from the bottom of the chain.

    External parts come first (keys decreasing), then internal parts (keys
    increasing), matching the order of the active filtration.
    """

    parts: tuple
    part_map: dict
    internal_keys: frozenset
    external_keys: frozenset

    def __hash__(self):
        return hash(self.parts)

    def part_of(self, e: int) -> int:
        return self.part_map[e]

    @property
    def external_part(self) -> frozenset:
        return frozenset().union(*(p for k, p in self.parts if k in self.external_keys))

    @property
    def internal_part(self) -> frozenset:
        return frozenset().union(*(p for k, p in self.parts if k in self.internal_keys))

    def text(self, joiner: str = "+", ground=None) -> str:
        """Parts from the bottom of the chain, e.g. ``356+24+1``."""
        return joiner.join(compact_set(p, ground) for _, p in self.parts)


def _part_map(F: FundamentalGraph) -> dict:
    internal_active = F.internally_active
    external_active = F.externally_active
    part = {}
    is_int = {}
    for e in F.ground:
        low = _lower(F, e)
        if e in F.basis:
            if e in internal_active:
                is_int[e], part[e] = True, e
                continue
            ext_low = [c for c in low if not is_int[c]]
            if ext_low:
                is_int[e], part[e] = False, max(part[c] for c in ext_low)
            else:
                is_int[e], part[e] = True, min(part[c] for c in low)
        else:
            if e in external_active:
                is_int[e], part[e] = False, e
                continue
            int_low = [c for c in low if is_int[c]]
            if int_low:
                is_int[e], part[e] = True, max(part[c] for c in int_low)
            else:
                is_int[e], part[e] = False, min(part[c] for c in low)
    return part


def active_partition(F: FundamentalGraph, *, cross_check: bool | None = None) -> ActivePartition:
    """Active partition via a single pass computing each element's part key."""
    part = _part_map(F)
    ints, exts = F.internally_active, F.externally_active
    fibres = {k: frozenset(e for e in F.ground if part[e] == k) for k in ints | exts}
    keys = sorted(exts, reverse=True) + sorted(ints)
    parts = tuple((k, fibres[k]) for k in keys)
    result = ActivePartition(parts, part, frozenset(ints), frozenset(exts))
    if CROSS_CHECK if cross_check is None else cross_check:
        expected = active_filtration(F).parts_in_chain_order()
        if [p for _, p in parts] != expected:
            raise ConsistencyError("single-pass active partition disagrees with the active filtration")
    return result


def partition_from_filtration(f: Filtration, F: FundamentalGraph) -> ActivePartition:
    """Active partition read off the successive differences of ``f``."""
    parts = tuple((min(p), p) for p in f.parts_in_chain_order())
    part = {e: k for k, p in parts for e in p}
    return ActivePartition(parts, part, frozenset(F.internally_active),
                           frozenset(F.externally_active))
