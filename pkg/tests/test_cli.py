import json
import random

import pytest

from ballotkl.cli import main
from ballotkl.strings import all_strings, bruhat_leq


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_worked_example(capsys):
    code, out, _ = run(capsys, "poly", "--n", "6", "--case", "A", "--algo", "ballot", "111111", "211212")
    assert code == 0
    assert out.strip() == "1 + 2*t^2 + 2*t^4 - t^4*tN^2 + t^6 - t^6*tN^2"


def test_poly_diagonal_is_one(capsys):
    for algo in ("ballot", "hecke", "tree"):
        code, out, _ = run(capsys, "poly", "--algo", algo, "2121", "2121")
        assert (code, out.strip()) == (0, "1")


def test_poly_all_agrees_on_random_pairs(capsys):
    rng = random.Random(5)
    pairs = [(a, b) for b in all_strings(5) for a in all_strings(5) if bruhat_leq(a, b)]
    for a, b in rng.sample(pairs, 20):
        for extra in ([], ["--case", "B", "--m", "2"], ["--eps", "-"]):
            code, out, _ = run(capsys, "poly", "--algo", "all", *extra, a, b)
            assert code == 0 and out.strip().endswith("AGREE") and "DISAGREE" not in out


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "--format", "json", "--algo", "all", "11", "22")
    doc = json.loads(out)
    assert doc["verdict"] == "AGREE" and set(doc["results"]) == {"ballot", "hecke", "tree"}


def test_poly_errors(capsys):
    assert run(capsys, "poly", "21", "11")[0] == 2
    assert run(capsys, "poly", "13", "11")[0] == 2
    assert run(capsys, "poly", "--case", "B", "11", "12")[0] == 2
    assert run(capsys, "poly", "--m", "2", "11", "12")[0] == 2
    assert run(capsys, "poly", "--algo", "linkpattern", "11", "12")[0] == 2


def test_table_n1_minus(capsys):
    code, out, _ = run(capsys, "table", "--n", "1", "--eps", "-", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == ["1", "2"]
    assert doc["matrix"] == [[[[0, 0, 1]], [[0, 0, 1]]], [[], [[0, 0, 1]]]]


def test_table_csv_diagonal(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--case", "B", "--m", "1", "--format", "csv")
    rows = [r.split(",") for r in out.strip().splitlines()]
    assert rows[0][1:] == all_strings(3)
    for k, r in enumerate(rows[1:], start=1):
        assert r[k] == "1"


def test_table_cap(capsys, monkeypatch):
    monkeypatch.setenv("BALLOTKL_MAX_N", "3")
    code, _, err = run(capsys, "table", "--n", "4")
    assert code == 2 and "BALLOTKL_MAX_N" in err


@pytest.mark.parametrize("argv", [
    ["verify", "inversion-ballot", "--n", "4", "--case", "A"],
    ["verify", "Q-equals-R", "--n", "5", "--case", "B", "--m", "2"],
    ["verify", "bijection-roundtrip", "--n", "4"],
])
def test_verify_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "PASS" in out


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "nope")[0] == 2


def test_render_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "diagram", "221121")
    assert code == 0 and out.count("--cycle;") == 13
    code, out2, _ = run(capsys, "render", "diagram", "221121")
    assert out2 == out
    code, _, err = run(capsys, "render", "configurations", "111111", "211212",
                       "--format", "svg", "--out", str(tmp_path))
    assert code == 0 and len(list(tmp_path.glob("*.svg"))) == 8
    code, out, _ = run(capsys, "render", "tree", "11111111", "22111211", "--case", "B",
                       "--m", "2", "--labels", "2,2,2,3")
    assert code == 0 and "+:2" in out
    assert run(capsys, "render", "tree", "2211211", "--labels", "1,2")[0] == 2


def test_render_cap_only_for_configurations(capsys, monkeypatch):
    monkeypatch.setenv("BALLOTKL_MAX_N", "4")
    assert run(capsys, "render", "linkpattern", "1221222112")[0] == 0
    assert run(capsys, "render", "configurations", "11111", "21212")[0] == 2
