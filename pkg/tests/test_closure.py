import pytest
from conftest import S
from hypothesis import given, settings
from strategies import bipartite_graphs

from active_matroid.checks import closure_characterization_ok, closure_conditions
from active_matroid.closure import (
    acl_basis_sweep,
    acl_ext,
    acl_fixed_point,
    acl_int,
    acl_single_pass,
    active_filtration,
    active_partition,
    internal_external_partition,
    partition_from_filtration,
)
from active_matroid.errors import NotExternallyActive, NotInternallyActive
from active_matroid.filtration import filtration_dual
from active_matroid.fundamental import FundamentalGraph, fg_dual, fg_remove, fundamental_graph
from active_matroid.matroid import subsets

E6 = S(123456)


def fg(M, b):
    return fundamental_graph(M, S(b))


def test_acl_examples(k4):
    assert acl_int(fg(k4, 126), {2}) == S(23456)
    assert acl_int(fg(k4, 126), ()) == frozenset()
    assert acl_int(fg(k4, 146), {1}) == S(135)
    assert acl_ext(fg(k4, 256), {3}) == S(356)
    assert acl_ext(fg(k4, 256), {1, 3}) == E6
    assert acl_ext(fg(k4, 256), ()) == frozenset()


def test_acl_rejects_inactive(k4):
    with pytest.raises(NotInternallyActive):
        acl_int(fg(k4, 126), {3})
    with pytest.raises(NotExternallyActive):
        acl_ext(fg(k4, 256), {2})


def test_internal_external_partition(k4):
    assert internal_external_partition(fg(k4, 146)) == (S(135), S(246))
    assert internal_external_partition(fg(k4, 136)) == (E6, frozenset())
    assert internal_external_partition(fg(k4, 456)) == (frozenset(), E6)


def test_active_filtration_examples(k4):
    f = active_filtration(fg(k4, 126))
    assert f.cyclic_set == frozenset() and f.internal_chain == (frozenset(), S(1), E6)
    f = active_filtration(fg(k4, 146))
    assert f.external_chain == (frozenset(), S(246)) and f.internal_chain == (S(246), E6)
    f = active_filtration(fg(k4, 456))
    assert f.external_chain == (frozenset(), S(356), S(23456), E6)
    assert f.internal_chain == (E6,)


def test_active_partition_examples(k4):
    p = active_partition(fg(k4, 146))
    assert [(k, set(v)) for k, v in p.parts] == [(2, {2, 4, 6}), (1, {1, 3, 5})]
    assert p.text() == "246+135"
    assert active_partition(fg(k4, 124)).text() == "1+23+456"
    p = active_partition(fg(k4, 136))
    assert p.parts == ((1, E6),)
    assert p.part_of(4) == 1


def test_partition_map_properties(full_corpus):
    for M in full_corpus:
        for B in M.bases:
            F = fundamental_graph(M, B)
            p = active_partition(F)
            seen = set()
            for key, part in p.parts:
                assert min(part) == key and not part & seen
                seen |= part
            assert seen == F.ground_set
            internal, external = internal_external_partition(F)
            assert p.internal_part == internal and p.external_part == external
            assert p == partition_from_filtration(active_filtration(F), F)


def test_empty_ground_set():
    F = FundamentalGraph((), frozenset(), {})
    f = active_filtration(F)
    assert (f.iota, f.epsilon, f.cyclic_set) == (0, 0, frozenset())
    assert active_partition(F).parts == ()


def _all_X(F):
    return subsets(F.internally_active)


def test_characterization_k4(k4):
    for B in k4.bases:
        assert closure_characterization_ok(fundamental_graph(k4, B))


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs(max_n=6))
def test_characterization_standalone(F):
    assert closure_characterization_ok(F)


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_three_algorithms_agree(F):
    for X in _all_X(F):
        a = acl_single_pass(F, X)
        assert a == acl_fixed_point(F, X) == acl_basis_sweep(F, X)
        assert closure_conditions(F, X, a)


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_closure_meets_active_elements_only_in_X(F):
    active = F.internally_active | F.externally_active
    for X in _all_X(F):
        A = acl_int(F, X)
        assert A & active == X
        if A == F.ground_set:
            assert X == F.internally_active


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs())
def test_additivity(F):
    for X in _all_X(F):
        for Y in subsets(X):
            Z = X - Y
            AY = acl_int(F, Y)
            rest = fg_remove(F, AY)
            AZ = acl_int(rest, Z)
            assert not AY & AZ
            assert acl_int(F, X) == AY | AZ


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs())
def test_monotone(F):
    for X in _all_X(F):
        AX = acl_int(F, X)
        for Y in subsets(X):
            assert acl_int(F, Y) <= AX


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs())
def test_restriction_to_internal_part(F):
    internal, Fc = internal_external_partition(F)
    inner = fg_remove(F, Fc)
    for X in _all_X(F):
        A = acl_int(F, X)
        assert A == acl_int(inner, X)
        assert internal_external_partition(fg_remove(F, A))[1] == Fc


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_partition_identity_standalone(F):
    internal, external = internal_external_partition(F)
    assert not internal & external and internal | external == F.ground_set
    assert internal == acl_int(F, F.internally_active)
    assert external == acl_ext(F, F.externally_active)


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_filtration_duality_standalone(F):
    assert active_filtration(fg_dual(F)) == filtration_dual(active_filtration(F))


@settings(max_examples=200, deadline=None)
@given(bipartite_graphs())
def test_filtration_minima(F):
    f = active_filtration(F)
    assert list(f.internal_mins) == sorted(F.internally_active)
    assert list(f.external_mins) == sorted(F.externally_active)
    assert [p for _, p in active_partition(F).parts] == f.parts_in_chain_order()
