from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kleinfan.cli import run


def cli(capsys, *argv):
    try:
        code = run(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_ok(capsys):
    code, out, _ = cli(capsys, "verify", "--type", "A2", "--n", "3", "--K", "1,2")
    rep = json.loads(out)
    assert code == 0 and rep["overall"] is True
    assert rep["diagram"]["edges"] == [[0, 1], [0, 2], [1, 2]]


def test_verify_failure_exit_1(capsys):
    code, out, _ = cli(capsys, "verify", "--type", "A3", "--n", "2", "--K", "1,3")
    assert code == 1 and json.loads(out)["overall"] is False


def test_verify_budget_exit_3(capsys):
    code, out, _ = cli(capsys, "verify", "--type", "A3", "--n", "3", "--K", "1", "--budget", "3")
    assert code == 3 and json.loads(out)["overall"] is None


def test_chambers_budget_exit_3(capsys):
    code, _, err = cli(capsys, "chambers", "--type", "A3", "--n", "3", "--budget", "3")
    assert code == 3 and "budget 3" in err


def test_targeted(capsys):
    code, out, _ = cli(capsys, "verify", "--type", "E8", "--n", "2", "--K", "1", "--targeted")
    rep = json.loads(out)
    assert code == 0 and len(rep["clauses"]) == 5


def test_cone_sigma_empty(capsys):
    code, out, _ = cli(capsys, "cone", "--type", "A2", "--n", "3", "--K", "", "--which", "sigma")
    c = json.loads(out)
    assert code == 0 and c["dim"] == 3 and c["label"] == "sigma_{}"


@pytest.mark.parametrize("argv", [
    ["cone", "--type", "A2", "--K", "1,1"],
    ["cone", "--type", "A2", "--K", "3"],
    ["cone", "--type", "A2", "--K", "x"],
    ["roots", "--type", "B2"],
    ["figure", "--type", "A3"],
    ["locate", "--type", "A2", "--point=1,-1,1"],
    ["locate", "--type", "A2", "--point=1,1"],
    ["locate", "--type", "A2", "--point=a/b,1,1"],
    ["arrangement", "--type", "A2", "--n", "0"],
    ["arrangement", "--type", "A2", "--format", "svg"],
    ["verify", "--type", "A2", "--n", "1"],
])
def test_usage_errors(capsys, argv):
    assert cli(capsys, *argv)[0] == 2


def test_locate(capsys):
    code, out, _ = cli(capsys, "locate", "--type", "A2", "--n", "3", "--point=7/2,1,0")
    loc = json.loads(out)
    assert code == 0 and "caveat" not in loc
    code, out, _ = cli(capsys, "locate", "--type", "A2", "--n", "1", "--point=1,0,0")
    assert "caveat" in json.loads(out)


def test_arrangement_and_roots(capsys):
    _, out, _ = cli(capsys, "arrangement", "--type", "A2", "--n", "3")
    arr = json.loads(out)
    assert arr["count"] == 16 and arr["interior_cutting_count"] == 6
    _, out, _ = cli(capsys, "roots", "--type", "E8")
    roots = json.loads(out)
    assert roots["num_positive_roots"] == 120 and roots["coxeter"] == 30


def test_figure_and_output_file(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, out, _ = cli(capsys, "figure", "--type", "A2", "--n", "3", "--output", str(path))
    svg = path.read_text()
    assert code == 0 and out == ""
    assert svg.count('class="wall"') == 6 and svg.count('class="hl"') == 4


def test_chambers(capsys):
    code, out, _ = cli(capsys, "chambers", "--type", "A2", "--n", "3")
    ch = json.loads(out)
    assert code == 0 and ch["count"] == ch["count_by_wall_walk"] == 12 and ch["counts_agree"]


def test_text_format(capsys):
    code, out, _ = cli(capsys, "roots", "--type", "A2", "--format", "text")
    assert code == 0 and out.startswith("type: ")


@pytest.mark.parametrize("argv", [
    ["chambers", "--type", "A2", "--n", "3"],
    ["figure", "--type", "A2", "--n", "3"],
    ["verify", "--type", "A3", "--n", "2", "--K", "2"],
])
def test_byte_deterministic_across_processes(argv):
    runs = [subprocess.run([sys.executable, "-m", "kleinfan", *argv], capture_output=True, check=False).stdout
            for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
