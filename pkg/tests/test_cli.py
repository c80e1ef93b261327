import json
import subprocess
import sys
from fractions import Fraction

import pytest

from abelcover.cli import ParseError, main, parse_presentation_text, parse_rational, rational


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_basic():
    pf = parse_presentation_text("N = 4\nA = [[1,1,1,1]]\n")
    assert pf.N == 4 and pf.rows == ((1, 1, 1, 1),)


def test_parse_comments_whitespace_crlf_multiline():
    text = "# header\r\nA = [\r\n  [1, 1, 0, -2],  # row 0\r\n  [0,1,1,0],\r\n]\r\n   N=2\r\n"
    pf = parse_presentation_text(text)
    assert pf.N == 2 and pf.rows == ((1, 1, 0, -2), (0, 1, 1, 0))


@pytest.mark.parametrize("text, line, col, fragment", [
    ("N = 4\nA = [[1,1,1]]\n", 2, 6, "3 entries"),
    ("N = 4\n", 2, 1, "missing key 'A'"),
    ("N = 4\nN = 4\nA = [[0,0,0,0]]", 2, 1, "twice"),
    ("N = x\nA = [[0,0,0,0]]", 1, 5, "integer"),
    ("N = 4\nA = [[1,1,1,1]\n", 3, 1, "end of file"),
    ("N = 4\nB = 3\n", 2, 1, "unknown key"),
    ("N = 4;\n", 1, 6, "unexpected character"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_presentation_text(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert fragment in str(info.value)


def test_rationals():
    assert rational(Fraction(2, 4)) == "1/2"
    assert rational(Fraction(3)) == "3"
    assert rational(0) == "0"
    assert parse_rational("2/5") == Fraction(2, 5)


def test_analyze_human(write, capsys):
    code, out, _ = run(["analyze", write("p.txt", "N = 4\nA = [[1,1,1,1]]\n")], capsys)
    assert code == 0
    assert "degree: 4" in out and "genus: 3" in out
    assert "spectrum: 1 (1.000000), 0 (0.000000), 0 (0.000000)" in out


def test_analyze_json(write, capsys):
    code, out, _ = run(["analyze", "--json", write("p.txt", "N = 4\nA = [[1,1,1,1]]\n")], capsys)
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"presentation", "degree", "genus", "ramification", "stratum",
                         "eigenspaces", "spectrum"}
    assert data["presentation"] == {"N": 4, "A": [[1, 1, 1, 1]]}
    assert data["degree"] == 4 and data["genus"] == 3
    assert data["ramification"] == [4, 4, 4, 4]
    assert data["spectrum"] == ["1", "0", "0"]
    st = data["stratum"]
    assert st["trivial_holonomy"] is True and st["marked_points"] == 0
    assert st["holonomy_cover"] == {"N": 4, "A": [[1, 1, 1, 1], [2, 2, 2, 2]]}
    e = data["eigenspaces"][1]
    assert e == {"r": [2, 2, 2, 2], "t_r": "2", "t_minus_r": "2", "dim_h10": 1, "dim_h1": 2,
                 "eligible": True, "hgde": ["1/2", "1/2", "1"], "angles": ["0", "0", "0"],
                 "exponent": "1"}
    assert json.loads(json.dumps(data)) == data


def test_analyze_trivial(write, capsys):
    code, out, _ = run(["analyze", "--json", write("p.txt", "N = 2\nA = [[0,0,0,0]]\n")], capsys)
    data = json.loads(out)
    assert (data["degree"], data["genus"], data["spectrum"]) == (1, 0, [])


def test_analyze_invalid_row(write, capsys):
    code, _, err = run(["analyze", write("p.txt", "N = 3\nA = [[1,1,1,1]]\n")], capsys)
    assert code == 1
    assert "row 0 sums to 1 mod 3" in err


def test_parse_error_exit(write, capsys):
    code, _, err = run(["analyze", write("p.txt", "N = 3\nA = [[1,1,1]]\n")], capsys)
    assert code == 1 and "line 2, column 6" in err


def test_missing_file(tmp_path, capsys):
    code, _, _ = run(["analyze", str(tmp_path / "nope.txt")], capsys)
    assert code == 1


def test_cap_exit(write, capsys):
    code, _, err = run(["analyze", "--cap", "2", write("p.txt", "N = 4\nA = [[1,1,1,1]]\n")], capsys)
    assert code == 3 and "cap" in err


@pytest.mark.parametrize("N, A, expected", [
    (3, "[[1,1,2,2]]", "2/3, 2/3"),
    (2, "[[1,1,1,1]]", "1"),
    (5, "[[1,1,1,2]]", "2/5, 2/5, 0, 0"),
])
def test_spectrum_command(write, capsys, N, A, expected):
    code, out, _ = run(["spectrum", write("p.txt", f"N = {N}\nA = {A}\n")], capsys)
    assert code == 0 and out.strip() == expected


def test_spectrum_json(write, capsys):
    code, out, _ = run(["spectrum", "--json", write("p.txt", "N = 5\nA = [[1,1,1,2]]\n")], capsys)
    data = json.loads(out)
    assert data == {"genus": 4, "spectrum": ["2/5", "2/5", "0", "0"]}
    assert [Fraction(x) for x in data["spectrum"]] == [Fraction(2, 5)] * 2 + [0, 0]


@pytest.mark.parametrize("p, q, rel", [
    ("N = 4\nA = [[1,1,1,1]]", "N = 2\nA = [[1,1,1,1]]", "covers"),
    ("N = 2\nA = [[1,1,1,1]]", "N = 4\nA = [[1,1,1,1]]", "covered-by"),
    ("N = 2\nA = [[1,1,1,1]]", "N = 4\nA = [[2,2,2,2]]", "isomorphic"),
    ("N = 2\nA = [[1,1,0,0]]", "N = 2\nA = [[0,1,1,0]]", "incomparable"),
])
def test_covers_command(write, capsys, p, q, rel):
    code, out, _ = run(["covers", write("p.txt", p), write("q.txt", q)], capsys)
    assert code == 0 and out.strip() == rel


def test_origami_command(write, capsys):
    path = write("p.txt", "N = 2\nA = [[0,0,0,0]]\n")
    code, out, _ = run(["origami", path], capsys)
    assert code == 0
    assert out.splitlines() == ["w:0 T -- b:0 T", "w:0 R -- b:0 R", "w:0 B -- b:0 B", "w:0 L -- b:0 L"]
    code, out, _ = run(["origami", "--format", "json", write("t.txt", "N=2\nA=[[1,1,1,1]]")], capsys)
    assert json.loads(out)["degree"] == 2
    assert "w:0 R -- b:1 R" in run(["origami", write("u.txt", "N=2\nA=[[1,1,1,1]]")], capsys)[1]


def test_verify_pass(write, capsys):
    code, out, _ = run(["verify", write("p.txt", "N = 5\nA = [[1,1,1,2]]\n")], capsys)
    assert code == 0 and "overall: pass" in out


def test_verify_inconclusive(write, capsys):
    code, out, _ = run(["verify", write("p.txt", "N = 4\nA = [[1,1,1,1]]\n")], capsys)
    assert code == 0 and "overall: inconclusive" in out


def test_verify_partial_pass(write, capsys):
    code, out, _ = run(["verify", "--json", write("p.txt", "N = 3\nA = [[1,1,2,2]]\n")], capsys)
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass"
    checks = {c["name"]: c for c in data["eigenspaces"][0]["checks"]}
    assert checks["angle[kappa]"]["status"] == "skipped"
    assert checks["angle[nu]"]["status"] == "pass"


def test_verify_failure_exit(write, capsys):
    code, out, _ = run(["verify", "--tol-angle", "1e-9", write("p.txt", "N = 5\nA = [[1,1,1,2]]\n")], capsys)
    assert code == 2 and "overall: fail" in out


def test_output_is_byte_identical(write, capsys):
    path = write("p.txt", "N = 6\nA = [[1,2,3,0],[2,2,1,1]]\n")
    for cmd in (["analyze", "--json"], ["analyze"], ["verify", "--json"], ["origami"]):
        first = run(cmd + [path], capsys)[1]
        second = run(cmd + [path], capsys)[1]
        assert first == second


def test_module_entry_point(write):
    path = write("p.txt", "N = 3\nA = [[1,1,2,2]]\n")
    proc = subprocess.run([sys.executable, "-m", "abelcover", "spectrum", path],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2/3, 2/3"
