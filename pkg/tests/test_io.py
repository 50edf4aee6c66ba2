import io
import json

import pytest
from conftest import DATA, S

from active_matroid.errors import ParseError, SizeBoundExceeded, ValidationError
from active_matroid.io import (
    apply_order,
    decomposition_to_json,
    detect_format,
    filtration_from_json,
    parse_input,
    parse_set,
    parse_text,
    render_table,
    table_rows,
)
from active_matroid.decomposition import decompose_basis, recompose
from active_matroid.matroid import Matroid, relabel, uniform_matroid


def test_parse_graph(k4):
    assert parse_input(str(DATA / "k4.graph")) == k4
    assert detect_format("4\n1 2\n") == "graph"


def test_parse_bases():
    assert parse_input(str(DATA / "u23.bases")) == uniform_matroid(2, 3)
    assert parse_text("3 2\n1,2\n1 3\n# comment\n2 3\n") == uniform_matroid(2, 3)


def test_parse_uniform():
    assert parse_input(str(DATA / "isthmus.uniform")) == uniform_matroid(1, 1)
    assert parse_text("uniform 2 4", "uniform") == uniform_matroid(2, 4)


def test_parse_rank_zero():
    assert parse_text("2 0\n") == uniform_matroid(0, 2)
    assert parse_text("2 0\n-\n") == uniform_matroid(0, 2)


def test_parse_stdin(monkeypatch, k4):
    monkeypatch.setattr("sys.stdin", io.StringIO((DATA / "k4.graph").read_text()))
    assert parse_input("-") == k4


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_text("3\n1 2\n1 x\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_text("3\n1 5\n")
    with pytest.raises(ParseError):
        parse_text("")
    with pytest.raises(ParseError):
        parse_text("1 2 3\n")
    with pytest.raises(ParseError) as err:
        parse_text("3 2\n1 2\n1 2 3\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_text("uniform 1 2\nextra\n")


def test_validation_errors():
    with pytest.raises(ValidationError):
        parse_text("4 2\n1 2\n3 4\n")
    with pytest.raises(ValidationError):
        parse_text("uniform 3 2")


def test_order_override(k4):
    M = apply_order(k4, [6, 5, 4, 3, 2, 1])
    assert S(135) not in M.bases and S(246) in M.bases
    with pytest.raises(ValidationError):
        apply_order(k4, [1, 2])


def test_parse_set():
    assert parse_set("1,4,6") == S(146) == parse_set("1 4 6")
    assert parse_set("-") == frozenset()
    with pytest.raises(ParseError):
        parse_set("1,a")


def test_k4_table_golden(k4):
    assert render_table(k4) == (DATA / "k4_table.txt").read_text()


def test_k4_row_order_follows_filtrations(k4):
    # within an activity group, shorter sets low in the chain come first
    bases = [row[-1] for row in table_rows(k4)]
    assert bases == ["124", "126", "125", "134", "135", "136", "146", "156",
                     "234", "245", "235", "236", "256", "346", "345", "456"]


def test_small_tables():
    assert table_rows(uniform_matroid(1, 1)) == [("[0] < E", "1", "1", "0", "1", "1")]
    assert render_table(uniform_matroid(1, 1), unicode=True).splitlines()[1] == "[∅]⊂E | 1 | 1 | ∅ | 1 | 1"
    empty = Matroid((), frozenset([frozenset()]))
    assert render_table(empty).count("\n") == 1


def test_table_bound(monkeypatch):
    monkeypatch.setenv("ACTIVE_MATROID_MAX_N", "2")
    with pytest.raises(SizeBoundExceeded):
        render_table(uniform_matroid(1, 3))


def test_wide_labels():
    W = relabel(uniform_matroid(2, 3), {1: 1, 2: 10, 3: 11})
    assert [r[5] for r in table_rows(W)] == ["1,10", "1,11", "10,11"]


def test_json_round_trip(k4):
    for B in k4.bases:
        data = json.loads(json.dumps(decomposition_to_json(decompose_basis(k4, B))))
        f = filtration_from_json(data["filtration"])
        ints = [p["basis"] for p in data["internal_parts"]]
        exts = [p["basis"] for p in data["external_parts"]]
        assert recompose(k4, f, ints, exts) == B
