import json
import subprocess
import sys

import pytest

from skewsp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_relations_json(capsys):
    code, out = run(capsys, "relations", "--n", "1", "--g", "2")
    data = json.loads(out.out)
    assert code == 0 and data["passed"]
    assert all(r["residual_norm_zero"] for r in data["relations"])


def test_check_232(capsys):
    code, out = run(capsys, "--text", "k3", "check-232")
    assert code == 0 and out.out.strip() == "232"


def test_graph_rank(capsys):
    code, out = run(capsys, "--text", "graphs", "rank", "--g", "2", "--n", "1", "--internal", "0")
    assert code == 0 and out.out.strip() == "5"
    code, out = run(capsys, "graphs", "rank", "--g", "2", "--n", "1", "--internal", "0")
    assert json.loads(out.out)["rank"] == 5


def test_k3_table(capsys):
    code, out = run(capsys, "k3", "table", "--g", "1")
    data = json.loads(out.out)
    assert {"p": [1], "q": 1, "h": 20} in data["entries"]
    code, out = run(capsys, "--text", "k3", "table", "--g", "2")
    assert code == 0 and "q=1" in out.out


def test_genus_bases(capsys):
    code, out = run(capsys, "genus", "--n", "2", "--g", "1", "--chern", "c2=24,c1c1=0")
    assert json.loads(out.out)["terms"] == {"0": "2/1", "1": "20/1", "2": "2/1"}
    code, out = run(capsys, "genus", "--n", "2", "--g", "1", "--chern", "c2=24",
                    "--basis", "one-minus-y")
    assert json.loads(out.out)["terms"]["0"] == "24/1"
    code, out = run(capsys, "genus", "--n", "1", "--g", "1")
    assert code == 0 and "coefficients" in json.loads(out.out)


def test_other_subcommands(capsys):
    for argv in (["decompose", "--n", "2", "--g", "2"], ["invariants", "--n", "1", "--g", "2"],
                 ["pn", "--n", "1", "--g", "2"]):
        code, out = run(capsys, *argv)
        assert code == 0 and json.loads(out.out)["passed"]


def test_guard_and_usage_errors(capsys):
    code, out = run(capsys, "relations", "--n", "3", "--g", "3")
    assert code == 2 and "2^18" in out.err
    code, out = run(capsys, "genus", "--n", "2", "--g", "1", "--chern", "x=1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["relations", "--bogus"])
    assert exc.value.code == 2


def test_selftest_subset(capsys):
    code, out = run(capsys, "selftest", "--only", "3,5,6")
    data = json.loads(out.out)
    assert code == 0 and [c["criterion"] for c in data["criteria"]] == [3, 5, 6]


def test_output_is_deterministic_and_exact():
    argv = [sys.executable, "-m", "skewsp.cli", "genus", "--n", "3", "--g", "2"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert "." not in first.replace("/", "")
