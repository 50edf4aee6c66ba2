import pytest
from hypothesis import given, settings
from oracles import tutte_deletion_contraction
from strategies import matroids

from active_matroid.errors import SizeBoundExceeded
from active_matroid.matroid import Matroid, cyclic_flats, dual, graphic_matroid, is_connected, minor, uniform_matroid
from active_matroid.tutte import (
    TuttePolynomial,
    beta,
    beta_star,
    tutte,
    tutte_by_activities,
    tutte_by_filtrations,
    tutte_convolution,
    tutte_rank_nullity,
)

K4_TEXT = "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"
EMPTY = Matroid((), frozenset([frozenset()]))
LOOP = uniform_matroid(0, 1)
ISTHMUS = uniform_matroid(1, 1)


@pytest.mark.parametrize("method", ["activities", "ranknullity", "filtrations", "convolution"])
def test_k4_all_methods(k4, method):
    assert str(tutte(k4, method)) == K4_TEXT


def test_k4_coefficients(k4):
    t = tutte_by_activities(k4)
    assert dict(t.items()) == {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4,
                               (0, 1): 2, (0, 2): 3, (0, 3): 1}
    assert t(1, 1) == 16


def test_small_cases():
    assert str(tutte_by_activities(ISTHMUS)) == "x"
    assert str(tutte_by_activities(LOOP)) == "y"
    assert str(tutte_rank_nullity(EMPTY)) == "1"
    assert str(tutte_by_filtrations(EMPTY)) == "1"
    assert str(tutte_by_filtrations(LOOP)) == "y"
    assert str(tutte_convolution(LOOP)) == "y"
    assert str(tutte_rank_nullity(uniform_matroid(2, 3))) == "x^2 + x + y"


def test_betas(k4):
    assert beta(k4) == 2 and beta_star(k4) == 2
    assert beta(ISTHMUS) == 1 and beta_star(ISTHMUS) == 0
    assert beta(LOOP) == 0 and beta_star(LOOP) == 1
    assert beta(EMPTY) == 0 and beta_star(EMPTY) == 0
    assert beta(uniform_matroid(1, 3)) == 1


def test_convolution_k4_terms(k4):
    flats = cyclic_flats(k4)
    assert len(flats) == 6
    total = TuttePolynomial()
    for Fc in flats:
        total = total + (tutte_by_activities(minor(k4, k4.ground, Fc)).at_y_zero()
                         * tutte_by_activities(minor(k4, Fc, ())).at_x_zero())
    assert total == tutte_by_activities(k4)


def test_four_way_and_oracle(full_corpus):
    for M in full_corpus:
        t = tutte_by_activities(M)
        assert t == tutte_deletion_contraction(M)
        assert t == tutte_rank_nullity(M)
        assert t == tutte_by_filtrations(M)
        assert t == tutte_by_filtrations(M, connected_only=True)
        assert t == tutte_convolution(M)
        assert t == tutte_convolution(M, cyclic_flats_only=False)


def test_beta_identities(full_corpus):
    for M in full_corpus:
        t = tutte_by_activities(M)
        assert tutte_by_activities(dual(M)) == t.transpose()
        assert t(1, 1) == len(M.bases)
        assert all(c > 0 for c in t.values())
        if len(M.ground) > 1:
            assert beta(M) == beta_star(M) == beta(dual(M))
            assert (beta(M) != 0) == is_connected(M)


@settings(max_examples=60, deadline=None)
@given(matroids())
def test_random_matroids_agree(M):
    t = tutte_by_activities(M)
    assert t == tutte_deletion_contraction(M)
    assert t == tutte_by_filtrations(M)
    assert t == tutte_convolution(M)


def test_size_bounds():
    big = uniform_matroid(1, 11)
    for fn in (tutte_rank_nullity, tutte_by_filtrations, tutte_convolution):
        with pytest.raises(SizeBoundExceeded):
            fn(big)
    assert tutte_by_activities(big)(1, 1) == 11


def test_unknown_method(k4):
    with pytest.raises(ValueError):
        tutte(k4, "magic")


def test_polynomial_type():
    p = TuttePolynomial({(1, 0): 2, (0, 2): 1, (0, 0): 0})
    assert len(p) == 2 and p[(5, 5)] == 0 and (1, 0) in p
    assert p == {(1, 0): 2, (0, 2): 1}
    assert str(p) == "2x + y^2"
    assert str(TuttePolynomial()) == "0"
    assert TuttePolynomial.from_json(p.to_json()) == p
    assert p.to_json() == [{"i": 1, "j": 0, "coeff": 2}, {"i": 0, "j": 2, "coeff": 1}]
    assert hash(p) == hash(TuttePolynomial({(0, 2): 1, (1, 0): 2}))
    q = TuttePolynomial({(0, 0): 1, (1, 0): 1})
    assert str(p * q) == "2x^2 + 2x + xy^2 + y^2"
    assert p(2, 3) == 13


def test_graph_with_loop_and_bridge():
    # a triangle with a pendant bridge and a self-loop
    M = graphic_matroid(4, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 4)])
    assert str(tutte_by_activities(M)) == "x^3y + x^2y + xy^2"
    assert tutte_by_filtrations(M) == tutte_by_activities(M)
