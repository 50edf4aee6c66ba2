"""Filtrations of an ordered ground set and the minors they induce.

A filtration is a chain

    0 = F'_eps < ... < F'_0 = F_c = F_0 < ... < F_iota = E

whose successive differences have increasing minima on each side of the
cyclic set ``F_c``.  Equivalently it is a subset ``F_c`` together with a set
partition of ``F_c`` and a set partition of ``E - F_c``; the enumeration
below walks that second description.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import EndpointMismatch, MinNotIncreasing, NotNested, SizeBoundExceeded
from .matroid import Matroid, as_set, is_connected, minor, subsets

DEFAULT_MAX_N = 10


_bound_override = []


def max_enumeration_size(override: int | None = None) -> int:
    """Bound on |E| for exhaustive enumeration.

    Precedence: the argument, then an active :func:`enumeration_bound`
    block, then env ``ACTIVE_MATROID_MAX_N``, then ``DEFAULT_MAX_N``.
    """
    if override is not None:
        return override
    if _bound_override:
        return _bound_override[-1]
    env = os.environ.get("ACTIVE_MATROID_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


@contextmanager
def enumeration_bound(n: int):
    _bound_override.append(n)
    try:
        yield
    finally:
        _bound_override.pop()


def format_set(s: Iterable[int], ground: Sequence[int] | None = None,
               sep: str = " ", unicode: bool = False) -> str:
    s = sorted(s)
    if not s:
        return "∅" if unicode else "0"
    if ground is not None and len(s) == len(ground) and len(ground) > 0:
        return "E"
    return sep.join(str(e) for e in s)


def compact_set(s: Iterable[int], ground: Sequence[int] | None = None,
                unicode: bool = False) -> str:
    """Short label such as ``356``; commas once any label needs two digits."""
    s = sorted(s)
    if not s:
        return "∅" if unicode else "0"
    labels = ground if ground is not None else s
    return ("," if any(e >= 10 for e in labels) else "").join(str(e) for e in s)


@dataclass(frozen=True)
class Filtration:
    """A validated filtration.

    ``external_chain`` runs F'_eps, ..., F'_0 and ``internal_chain`` runs
    F_0, ..., F_iota; both contain the cyclic set at their shared end.
    """

    ground: tuple
    external_chain: tuple
    internal_chain: tuple

    @property
    def cyclic_set(self) -> frozenset:
        return self.internal_chain[0]

    @property
    def iota(self) -> int:
        return len(self.internal_chain) - 1

    @property
    def epsilon(self) -> int:
        return len(self.external_chain) - 1

    def F(self, k: int) -> frozenset:
        return self.internal_chain[k]

    def Fp(self, k: int) -> frozenset:
        """F'_k."""
        return self.external_chain[self.epsilon - k]

    def chain(self) -> tuple:
        """All sets from F'_eps up to F_iota, the cyclic set listed once."""
        return self.external_chain + self.internal_chain[1:]

    def internal_parts(self) -> list:
        """F_k - F_{k-1} for k = 1..iota."""
        c = self.internal_chain
        return [c[k] - c[k - 1] for k in range(1, len(c))]

    def external_parts(self) -> list:
        """F'_{k-1} - F'_k for k = 1..eps."""
        return [self.Fp(k - 1) - self.Fp(k) for k in range(1, self.epsilon + 1)]

    def parts_in_chain_order(self) -> list:
        """Successive differences from the bottom of the chain to the top."""
        ch = self.chain()
        return [ch[i] - ch[i - 1] for i in range(1, len(ch))]

    @cached_property
    def internal_mins(self) -> tuple:
        return tuple(min(p) for p in self.internal_parts())

    @cached_property
    def external_mins(self) -> tuple:
        return tuple(min(p) for p in self.external_parts())

    def text(self, unicode: bool = False) -> str:
        """Canonical text form such as ``0 < 3 5 6 < [E]``.

        With ``unicode`` the glyph form ``∅⊂[356]⊂E`` is used instead.
        """
        ch = self.chain()
        cyc = len(self.external_chain) - 1
        out = []
        for i, s in enumerate(ch):
            if unicode:
                t = "E" if s and len(s) == len(self.ground) else compact_set(s, self.ground, True)
            else:
                t = format_set(s, self.ground)
            out.append(f"[{t}]" if i == cyc else t)
        return ("⊂" if unicode else " < ").join(out)

    def __str__(self) -> str:
        return self.text()


def validate_filtration(ground: Iterable[int], external_chain: Sequence,
                        internal_chain: Sequence) -> Filtration:
    """Check a candidate chain pair and return it as a :class:`Filtration`.

    ``external_chain`` lists F'_eps..F'_0 and ``internal_chain`` F_0..F_iota.
    """
    E = as_set(ground)
    ext = tuple(as_set(s) for s in external_chain)
    inn = tuple(as_set(s) for s in internal_chain)
    if not ext or not inn:
        raise EndpointMismatch("both chains must contain the cyclic set")
    if ext[-1] != inn[0]:
        raise EndpointMismatch("F'_0 and F_0 differ")
    if ext[0]:
        raise EndpointMismatch("F'_eps must be empty")
    if inn[-1] != E:
        raise EndpointMismatch("F_iota must be the ground set")
    for ch in (ext, inn):
        for a, b in zip(ch, ch[1:]):
            if not a < b:
                raise NotNested(f"{sorted(a)} is not strictly inside {sorted(b)}")
    inner_mins = [min(b - a) for a, b in zip(inn, inn[1:])]
    for k in range(1, len(inner_mins)):
        if inner_mins[k] <= inner_mins[k - 1]:
            raise MinNotIncreasing("internal", k + 1)
    # external side indexed from F'_0 downwards
    rev = ext[::-1]
    outer_mins = [min(rev[k - 1] - rev[k]) for k in range(1, len(rev))]
    for k in range(1, len(outer_mins)):
        if outer_mins[k] <= outer_mins[k - 1]:
            raise MinNotIncreasing("external", k + 1)
    return Filtration(tuple(sorted(E)), ext, inn)


def from_parts(ground: Iterable[int], cyclic_set, external_parts, internal_parts) -> Filtration:
    """Rebuild the chain from a bipartition and a partition of each side.

    Parts may come in any order; they are placed by their minima.
    """
    E = tuple(sorted(as_set(ground)))
    ext, inn = _chains(as_set(cyclic_set), external_parts, internal_parts)
    return validate_filtration(E, ext, inn)


def _chains(Fc, external_parts, internal_parts):
    inn = [Fc]
    for p in sorted((as_set(p) for p in internal_parts), key=min):
        inn.append(inn[-1] | p)
    # F'_k is the union of parts k+1..eps, parts sorted by minimum
    ext = [frozenset()]
    for p in sorted((as_set(p) for p in external_parts), key=min, reverse=True):
        ext.append(ext[-1] | p)
    return tuple(ext), tuple(inn)


def set_partitions(items: Sequence) -> Iterator[list]:
    """All set partitions of ``items``; each block keeps input order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def enumerate_filtrations(ground: Iterable[int], max_n: int | None = None) -> Iterator[Filtration]:
    """Yield every filtration of ``ground`` exactly once."""
    E = tuple(sorted(as_set(ground)))
    bound = max_enumeration_size(max_n)
    if len(E) > bound:
        raise SizeBoundExceeded(f"|E|={len(E)} exceeds the enumeration bound {bound}")
    for Fc in subsets(E):
        outside = [e for e in E if e not in Fc]
        inside = sorted(Fc)
        # blocks from set_partitions are already ordered by their minima
        for ext_parts in set_partitions(inside):
            for int_parts in set_partitions(outside):
                ext, inn = _chains(Fc, map(frozenset, ext_parts), map(frozenset, int_parts))
                yield Filtration(E, ext, inn)


def induced_minors(M: Matroid, f: Filtration) -> tuple:
    """(M_1..M_iota, M'_1..M'_eps) with M_k = M(F_k)/F_{k-1}, M'_k = M(F'_{k-1})/F'_k."""
    inner = [minor(M, f.F(k), f.F(k - 1)) for k in range(1, f.iota + 1)]
    outer = [minor(M, f.Fp(k - 1), f.Fp(k)) for k in range(1, f.epsilon + 1)]
    return inner, outer


def _ok_internal(N: Matroid) -> bool:
    return is_connected(N) and not (len(N.ground) == 1 and N.rank == 0)


def _ok_external(N: Matroid) -> bool:
    return is_connected(N) and not (len(N.ground) == 1 and N.rank == 1)


@lru_cache(maxsize=1 << 16)
def _minor_ok(M: Matroid, G: frozenset, F: frozenset, internal: bool) -> bool:
    N = minor(M, G, F)
    return _ok_internal(N) if internal else _ok_external(N)


def is_connected_filtration(M: Matroid, f: Filtration) -> bool:
    """Every M(F_k)/F_(k-1) connected and not a loop, every M(F'_(k-1))/F'_k
    connected and not an isthmus."""
    return (all(_minor_ok(M, f.F(k), f.F(k - 1), True) for k in range(1, f.iota + 1))
            and all(_minor_ok(M, f.Fp(k - 1), f.Fp(k), False)
                    for k in range(1, f.epsilon + 1)))


def beta_product(M: Matroid, f: Filtration) -> int:
    """Product of beta over internal minors and beta* over external minors."""
    from .tutte import beta, beta_star

    out = 1
    for k in range(1, f.iota + 1):
        out *= beta(minor(M, f.F(k), f.F(k - 1)))
        if not out:
            return 0
    for k in range(1, f.epsilon + 1):
        out *= beta_star(minor(M, f.Fp(k - 1), f.Fp(k)))
        if not out:
            return 0
    return out


def filtration_dual(f: Filtration) -> Filtration:
    """Complement every set and reverse the chain: a filtration for the dual."""
    E = frozenset(f.ground)
    ext = tuple(E - s for s in reversed(f.internal_chain))
    inn = tuple(E - s for s in reversed(f.external_chain))
    return Filtration(f.ground, ext, inn)


def truncate_external(f: Filtration) -> Filtration:
    """The chain up to F_c, a filtration of M(F_c)."""
    Fc = f.cyclic_set
    return Filtration(tuple(sorted(Fc)), f.external_chain, (Fc,))


def truncate_internal(f: Filtration) -> Filtration:
    """The chain from F_c up, shifted by F_c: a filtration of M/F_c."""
    Fc = f.cyclic_set
    ground = tuple(e for e in f.ground if e not in Fc)
    return Filtration(ground, (frozenset(),), tuple(s - Fc for s in f.internal_chain))


def subchain(f: Filtration, lower, upper) -> Filtration:
    """The part of the chain between members ``lower`` and ``upper``, minus ``lower``."""
    lower, upper = as_set(lower), as_set(upper)
    ch = f.chain()
    i, j = ch.index(lower), ch.index(upper)
    if i > j:
        raise NotNested("lower member sits above upper member")
    cyc = f.epsilon
    sub = [s - lower for s in ch[i:j + 1]]
    ground = tuple(sorted(upper - lower))
    if cyc < i:
        return Filtration(ground, (sub[0],), tuple(sub))
    if cyc > j:
        return Filtration(ground, tuple(sub), (sub[-1],))
    c = cyc - i
    return Filtration(ground, tuple(sub[:c + 1]), tuple(sub[c:]))

