"""Invariant checks run by ``verify`` and by the test-suite.

Each check takes a matroid and returns a :class:`CheckResult`.  Checks that
enumerate exhaustively skip themselves (status ``skip``) above a size bound
instead of failing.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .closure import (
    acl_basis_sweep,
    acl_ext,
    acl_fixed_point,
    acl_int,
    acl_single_pass,
    active_filtration,
    internal_external_partition,
)
from .corpus import random_relabelings
from .decomposition import (
    classify_all_bases,
    decompose_basis,
    etlv_split,
    recompose,
    swap_min_bijection,
    uniactive_bases,
)
from .errors import ConsistencyError, MatroidError
from .filtration import (
    enumerate_filtrations,
    filtration_dual,
    induced_minors,
    is_connected_filtration,
    max_enumeration_size,
)
from .fundamental import FundamentalGraph, fg_remove, fundamental_graph
from .matroid import Matroid, dual, minor, subsets
from .tutte import (
    tutte_by_activities,
    tutte_by_filtrations,
    tutte_convolution,
    tutte_rank_nullity,
)

UNIQUENESS_MAX_N = 7
CLOSURE_MAX_N = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status.upper():4} {self.name}{tail}"


class _Failed(Exception):
    pass


def _named(name):
    def wrap(fn):
        fn.check_name = name
        return fn
    return wrap


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failed(msg)


def _bounded(name, M, bound):
    if len(M.ground) > bound:
        msg = f"|E|={len(M.ground)} above bound {bound}"
        warnings.warn(f"{name} skipped: {msg}", stacklevel=3)
        return CheckResult(name, "skip", msg)
    return None


# closure characterization


def closure_conditions(F: FundamentalGraph, X: frozenset, A: frozenset) -> bool:
    """Whether ``A`` meets the conditions that pin down acl(X).

    Basis elements of ``A`` have their cocircuits inside ``A``; removing ``A``
    leaves internal activity Int - X and unchanged external activity;
    keeping only ``A`` leaves internal activity X and no external activity.
    """
    E = F.ground_set
    if any(not F.cocircuit(b) <= A for b in F.basis & A):
        return False
    outside = fg_remove(F, A)
    if outside.internally_active != F.internally_active - X:
        return False
    if outside.externally_active != F.externally_active:
        return False
    inside = fg_remove(F, E - A)
    return inside.internally_active == X and not inside.externally_active


def closure_characterization_ok(F: FundamentalGraph) -> bool:
    """Brute force over every X within Int and every subset A of E."""
    everything = subsets(F.ground)
    for X in subsets(F.internally_active):
        expected = acl_int(F, X, cross_check=False)
        algos = {acl_single_pass(F, X), acl_fixed_point(F, X), acl_basis_sweep(F, X)}
        if algos != {expected}:
            return False
        if [A for A in everything if closure_conditions(F, X, A)] != [expected]:
            return False
    return True


# individual checks


@_named("tutte four ways")
def check_tutte_four_way(M: Matroid) -> CheckResult:
    name = check_tutte_four_way.check_name
    skip = _bounded(name, M, max_enumeration_size())
    if skip:
        return skip
    t = tutte_by_activities(M)
    others = {
        "rank-nullity": tutte_rank_nullity(M),
        "filtrations": tutte_by_filtrations(M),
        "connected filtrations": tutte_by_filtrations(M, connected_only=True),
        "convolution over cyclic flats": tutte_convolution(M),
        "convolution over subsets": tutte_convolution(M, cyclic_flats_only=False),
    }
    for label, p in others.items():
        _require(p == t, f"{label} gives {p}, activities give {t}")
    _require(t(1, 1) == len(M.bases), "t(1,1) differs from the number of bases")
    return CheckResult(name, "pass", str(t))


@_named("order invariance")
def check_order_invariance(M: Matroid, count: int = 5, seed: int = 0) -> CheckResult:
    name = check_order_invariance.check_name
    skip = _bounded(name, M, max_enumeration_size())
    if skip:
        return skip
    t = tutte_by_activities(M)
    for N in random_relabelings(M, count, seed):
        _require(tutte_by_activities(N) == t, "activities polynomial changed under relabeling")
        _require(tutte_by_filtrations(N) == t, "filtration polynomial changed under relabeling")
    return CheckResult(name, "pass", f"{count} relabelings")


def _uniactive_cache(M: Matroid):
    cache = {}

    def get(G, F):
        key = (G, F)
        if key not in cache:
            cache[key] = uniactive_bases(minor(M, G, F))
        return cache[key]

    return get


@_named("unique decomposition")
def check_uniqueness(M: Matroid) -> CheckResult:
    """Exactly one connected filtration cuts each basis into uniactive pieces."""
    name = check_uniqueness.check_name
    skip = _bounded(name, M, UNIQUENESS_MAX_N)
    if skip:
        return skip
    uni = _uniactive_cache(M)
    plans = []
    for f in enumerate_filtrations(M.ground):
        if not is_connected_filtration(M, f):
            continue
        inner = [(f.F(k) - f.F(k - 1), uni(f.F(k), f.F(k - 1))[0]) for k in range(1, f.iota + 1)]
        outer = [(f.Fp(k - 1) - f.Fp(k), uni(f.Fp(k - 1), f.Fp(k))[1])
                 for k in range(1, f.epsilon + 1)]
        plans.append((f, inner + outer))
    for B in M.sorted_bases():
        found = [f for f, pieces in plans if all(B & p in good for p, good in pieces)]
        expected = active_filtration(fundamental_graph(M, B))
        _require(found == [expected],
                 f"basis {sorted(B)}: {len(found)} matching filtrations")
    return CheckResult(name, "pass", f"{len(M.bases)} bases, {len(plans)} connected filtrations")


@_named("closure characterization")
def check_closure_characterization(M: Matroid) -> CheckResult:
    name = check_closure_characterization.check_name
    skip = _bounded(name, M, CLOSURE_MAX_N)
    if skip:
        return skip
    for B in M.sorted_bases():
        _require(closure_characterization_ok(fundamental_graph(M, B)),
                 f"basis {sorted(B)}")
    return CheckResult(name, "pass")


@_named("partition identity")
def check_partition_identity(M: Matroid) -> CheckResult:
    name = check_partition_identity.check_name
    E = M.ground_set
    for B in M.sorted_bases():
        F = fundamental_graph(M, B)
        internal, external = internal_external_partition(F)
        _require(not internal & external and internal | external == E,
                 f"basis {sorted(B)}: parts do not split E")
        _require(internal == acl_int(F, F.internally_active)
                 and external == acl_ext(F, F.externally_active),
                 f"basis {sorted(B)}: parts differ from the closures")
        Fc, ext_basis, int_basis = etlv_split(M, B)
        _require(Fc == external and ext_basis | int_basis == B,
                 f"basis {sorted(B)}: split does not match")
    return CheckResult(name, "pass")


@_named("fibre counts")
def check_fibre_counts(M: Matroid) -> CheckResult:
    name = check_fibre_counts.check_name
    skip = _bounded(name, M, max_enumeration_size())
    if skip:
        return skip
    groups = classify_all_bases(M)
    connected = [f for f in enumerate_filtrations(M.ground) if is_connected_filtration(M, f)]
    _require(set(groups) == set(connected),
             "bases do not reach exactly the connected filtrations")
    _require(sum(map(len, groups.values())) == tutte_by_activities(M)(1, 1),
             "fibre sizes do not add up to t(1,1)")
    return CheckResult(name, "pass", f"{len(groups)} filtrations")


@_named("duality")
def check_duality(M: Matroid) -> CheckResult:
    name = check_duality.check_name
    D = dual(M)
    E = M.ground_set
    for B in M.sorted_bases():
        F, Fd = fundamental_graph(M, B), fundamental_graph(D, E - B)
        _require(Fd.internally_active == F.externally_active
                 and Fd.externally_active == F.internally_active,
                 f"basis {sorted(B)}: activities do not swap")
        f = decompose_basis(M, B).filtration
        _require(decompose_basis(D, E - B).filtration == filtration_dual(f),
                 f"basis {sorted(B)}: dual filtration mismatch")
    _require(tutte_by_activities(D) == tutte_by_activities(M).transpose(),
             "t(M*) is not the transpose of t(M)")
    return CheckResult(name, "pass")


@_named("decompose/recompose round trip")
def check_round_trip(M: Matroid) -> CheckResult:
    name = check_round_trip.check_name
    for B in M.sorted_bases():
        dec = decompose_basis(M, B)
        back = recompose(M, dec.filtration, dec.internal_bases, dec.external_bases)
        _require(back == B, f"basis {sorted(B)} came back as {sorted(back)}")
        inner, outer = induced_minors(M, dec.filtration)
        _require([N for N, _ in dec.internal_parts] == inner
                 and [N for N, _ in dec.external_parts] == outer,
                 "pieces carry the wrong minors")
    return CheckResult(name, "pass")


@_named("swap bijection")
def check_swap_bijection(M: Matroid) -> CheckResult:
    name = check_swap_bijection.check_name
    if len(M.ground) < 2:
        return CheckResult(name, "skip", "needs at least two elements")
    pairs = swap_min_bijection(M)
    return CheckResult(name, "pass", f"{len(pairs)} pairs")


ALL_CHECKS = (
    check_tutte_four_way,
    check_order_invariance,
    check_uniqueness,
    check_closure_characterization,
    check_partition_identity,
    check_fibre_counts,
    check_duality,
    check_round_trip,
    check_swap_bijection,
)


def run_checks(M: Matroid, checks=ALL_CHECKS) -> list:
    results = []
    for check in checks:
        try:
            results.append(check(M))
        except _Failed as exc:
            results.append(CheckResult(check.check_name, "fail", str(exc)))
        except (ConsistencyError, MatroidError) as exc:
            results.append(CheckResult(check.check_name, "fail", f"{type(exc).__name__}: {exc}"))
    return results
