import json
import subprocess
import sys

import pytest

from shw import bracket, context, parse_poly, van_det
from shw import algebra as alg
from shw.cli import main, parse_tuples, run
from shw.closed_forms import golden_bracket, lonely_structure_bracket, witt_bracket


def js(*argv):
    code, out = run(list(argv) + ["--format", "json"])
    assert code == 0, out
    data = json.loads(out)
    assert data["schema"] == 1 and data["command"] == argv[0]
    return data


def test_published_examples():
    assert run(["bracket", "--dim", "2", "--order", "1", "1", "x", "y"]) == (0, "1")
    assert run(["vandermonde", "--dim", "2", "--order", "2", "--tuples", "0,0;1,0;0,1;2,0;1,1;0,2"]) == (0, "4")
    code, out = run(["witt", "--dim", "1", "--order", "1", "--indices", "3;5"])
    assert code == 0 and out.split() == ["omega", "2", "sum", "8"]


def test_bracket_roundtrip():
    args = ["1", "x", "y", "x^2", "x*y", "x*y^2"]
    data = js("bracket", "--dim", "2", "--order", "2", *args)
    ctx = context(2, 2)
    assert parse_poly(data["result"], 2) == bracket(ctx, [parse_poly(a, 2) for a in args])
    _, text = run(["bracket", "--dim", "2", "--order", "2", "--mode", "cofactor", *args])
    assert text == "4*x"


def test_rows_and_shift():
    data = js("rows", "--dim", "2", "--order", "2")
    assert [tuple(r) for r in data["rows"]] == list(context(2, 2).rows)
    assert js("shift", "--dim", "2", "--order", "2")["per_coordinate"] == 4
    assert run(["shift", "--dim", "2", "--order", "1"]) == (0, "per_coordinate 1\ntotal 2")


def test_vandermonde_roundtrip():
    data = js("vandermonde", "--dim", "2", "--order", "1", "--tuples", "0,0;0,1;0,2")
    assert data["certificate"] == "DeficientDegree(1)" and data["det"] == "0"
    data = js("vandermonde", "--dim", "1", "--order", "2", "--tuples", "1/2;3;-1")
    expect = van_det(context(1, 2), parse_tuples("1/2;3;-1"))
    assert data["det"] == str(expect) == data["quasi_triangular"]


def test_structure_golden_witt():
    data = js("structure", "--dim", "2", "--order", "1", "--row", "2", "--exps", "2,0")
    assert parse_poly(data["result"], 2) == lonely_structure_bracket(context(2, 1), 2, (2, 0))
    data = js("golden", "--dim", "2", "--order", "1", "--p", "2,0", "--q", "1,1", "--verify")
    assert (data["coeff"], data["exp"]) == ("-1", ["2", "1"]) and data["engine"] == data["result"]
    assert golden_bracket(context(2, 1), (2, 0), (1, 1)) == (-1, (2, 1))
    data = js("witt", "--dim", "2", "--order", "1", "--indices", "0,0;1,0;1/2,1")
    omega, total = witt_bracket(context(2, 1), parse_tuples("0,0;1,0;1/2,1"))
    assert data["omega"] == str(omega) and data["sum"] == [str(v) for v in total] and data["shift"] == "1/2"


def test_algebra_commands(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"dim": 2, "order": 1, "generators": ["1", "x", "y", "x*y"]}))
    assert run(["classify", "--algebra", str(path)]) == (0, "Lonely(x*y)")
    data = js("classify", "--algebra", str(path), "--after-closure")
    assert data["kind"] == "Lonely" and data["closure"]["dims"] == [4, 4]
    data = js("closure", "--algebra", str(path), "--show-basis")
    rep = alg.closure_iterate(context(2, 1), [parse_poly(g, 2) for g in ("1", "x", "y", "x*y")])
    assert data["status"] == "Stabilized" and data["dims"] == rep.dims and len(data["basis"]) == 4
    assert js("perfect", "--algebra", str(path))["perfect"] is True
    data = js("perfect", "--dim", "3", "--order", "1", "1", "x", "y", "z", "x*y")
    assert data["missing"] == ["z"]
    data = js("diagnose", "--dim", "2", "--order", "1", "1", "x", "y", "x*y")
    assert data["promising"] and [c["label"] for c in data["coordinates"]] == ["Abundant", "Abundant"]
    assert run(["classify", "--dim", "2", "--order", "1", "1", "x", "y", "x^3"]) == (0, "Lanky(x, 2)")
    code, out = run(["closure", "--dim", "2", "--order", "1", "1", "x", "y", "x^2", "x*y", "--max-degree", "8"])
    assert code == 0 and out.startswith("DegreeCapHit")


@pytest.mark.parametrize(
    "argv",
    [
        ["bracket", "--dim", "2", "--order", "1", "1", "x"],
        ["bracket", "--dim", "2", "--order", "1", "1", "x", "q"],
        ["bracket", "--dim", "2", "--order", "1", "1", "x", "y +"],
        ["vandermonde", "--dim", "2", "--order", "1", "--tuples", "0,0;1"],
        ["structure", "--dim", "2", "--order", "1", "--row", "9", "--exps", "1,1"],
        ["classify", "--dim", "2", "--order", "1"],
        ["classify", "--algebra", "/nonexistent/a.json"],
        ["rows", "--dim", "0", "--order", "1"],
        ["selfcheck", "--only", "99"],
    ],
)
def test_domain_errors(argv):
    code, out = run(argv)
    assert code == 1 and out.startswith("error: ") and "\n" not in out


@pytest.mark.parametrize("argv", [["bogus"], ["bracket", "--nope"], ["rows", "--dim", "x"], []])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_main_streams(capsys):
    assert main(["selfcheck", "--only", "1,2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 3 and out[-1] == "2/2 checks passed"
    assert main(["bracket", "--dim", "1", "--order", "1", "x"]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_console_entry():
    proc = subprocess.run([sys.executable, "-m", "shw", "witt", "--dim", "1", "--order", "1", "--indices", "3;5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.split() == ["omega", "2", "sum", "8"]
