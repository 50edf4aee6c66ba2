import json
import subprocess
import sys

import pytest
from conftest import DATA, S

from active_matroid import checks
from active_matroid.checks import CheckResult
from active_matroid.cli import cli_main
from active_matroid.decomposition import recompose
from active_matroid.io import filtration_from_json, parse_input
from active_matroid.tutte import TuttePolynomial

K4 = str(DATA / "k4.graph")
K4_TEXT = "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"


def run(capsys, *argv):
    code = cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("method", ["activities", "ranknullity", "filtrations", "convolution"])
def test_tutte(capsys, method):
    code, out, _ = run(capsys, "tutte", K4, "--method", method)
    assert code == 0 and out.strip() == K4_TEXT


def test_tutte_json(capsys, k4):
    code, out, _ = run(capsys, "tutte", K4, "--json")
    assert code == 0
    assert TuttePolynomial.from_json(json.loads(out)) == TuttePolynomial(
        {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1})


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", K4, "--basis", "1,4,6")
    assert code == 0
    assert out.splitlines() == ["filtration: 0 < [2 4 6] < E", "parts: 46 + 1"]


def test_decompose_json_round_trip(capsys, k4):
    for B in sorted(k4.bases, key=sorted):
        code, out, _ = run(capsys, "decompose", K4, "--basis", ",".join(map(str, sorted(B))), "--json")
        data = json.loads(out)
        f = filtration_from_json(data["filtration"])
        back = recompose(k4, f, [p["basis"] for p in data["internal_parts"]],
                         [p["basis"] for p in data["external_parts"]])
        assert back == B and data["basis"] == sorted(B)


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", K4, "--basis", "1,4,6")
    assert code == 0 and out.splitlines()[0] == "246 + 135"
    code, out, _ = run(capsys, "partition", K4, "--basis", "1,2,4", "--json")
    data = json.loads(out)
    assert [p["elements"] for p in data["parts"]] == [[1], [2, 3], [4, 5, 6]]
    assert data["external_part"] == []


def test_activities(capsys):
    code, out, _ = run(capsys, "activities", K4, "--basis", "2,5,6")
    lines = out.splitlines()
    assert code == 0 and lines[:3] == ["Int: 0", "Ext: 13", "activities: (0, 2)"]
    assert "\n".join(lines[3:]) + "\n" == (DATA / "k4_tableau_256.txt").read_text()
    code, out, _ = run(capsys, "activities", K4, "--basis", "2,5,6", "--json", "--unicode")
    data = json.loads(out)
    assert data["external_active"] == [1, 3] and data["iota"] == 0


def test_table(capsys):
    code, out, _ = run(capsys, "table", K4)
    assert code == 0 and out == (DATA / "k4_table.txt").read_text()
    code, out, _ = run(capsys, "table", K4, "--json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 16 and rows[0]["basis"] == "124"


def test_table_unicode(capsys):
    code, out, _ = run(capsys, "table", str(DATA / "isthmus.uniform"), "--unicode")
    assert out.splitlines()[1] == "[∅]⊂E | 1 | 1 | ∅ | 1 | 1"


def test_filtrations(capsys):
    code, out, _ = run(capsys, "filtrations", K4, "--connected")
    assert code == 0 and len(out.splitlines()) == 14
    code, out, _ = run(capsys, "filtrations", str(DATA / "u23.bases"))
    assert len(out.splitlines()) == 22
    code, out, _ = run(capsys, "filtrations", K4, "--connected", "--json")
    data = json.loads(out)
    assert sum(d["beta_product"] for d in data) == 16 and all(d["connected"] for d in data)


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", K4)
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())
    code, out, _ = run(capsys, "verify", K4, "--json")
    assert {r["status"] for r in json.loads(out)} == {"pass"}


def test_verify_skips_above_bounds(capsys, tmp_path):
    path = tmp_path / "u.txt"
    path.write_text("uniform 1 8\n")
    with pytest.warns(UserWarning):
        code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert any(line.startswith("SKIP closure characterization") for line in out.splitlines())


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(M):
        return CheckResult("broken", "fail", "forced")

    broken.check_name = "broken"
    monkeypatch.setattr(checks, "ALL_CHECKS", (broken,))
    code, out, _ = run(capsys, "verify", K4)
    assert code == 1 and out.startswith("FAIL broken")


def test_order_flag(capsys):
    code, out, _ = run(capsys, "decompose", K4, "--basis", "1,4,6", "--order", "6,5,4,3,2,1")
    assert code == 0
    code, out, _ = run(capsys, "tutte", K4, "--order", "6,5,4,3,2,1")
    assert out.strip() == K4_TEXT


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "decompose", K4, "--basis", "1,2,3")[0] == 2
    assert run(capsys, "tutte", str(tmp_path / "missing"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n1 2\n3 4\n")
    code, _, err = run(capsys, "tutte", str(bad))
    assert code == 2 and "exchange" in err
    bad.write_text("3\n1 q\n")
    code, _, err = run(capsys, "tutte", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "tutte", K4, "--method", "magic")[0] == 2
    assert run(capsys, "decompose", K4)[0] == 2
    assert run(capsys, "tutte", K4, "--max-n", "3", "--method", "filtrations")[0] == 2


def test_deterministic(capsys):
    first = run(capsys, "table", K4, "--json")[1]
    assert run(capsys, "table", K4, "--json")[1] == first


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "active_matroid", "tutte", K4, "--method", "filtrations"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == K4_TEXT


def test_parse_input_matches_cli(k4):
    assert parse_input(K4) == k4
    assert S(146) in k4.bases
