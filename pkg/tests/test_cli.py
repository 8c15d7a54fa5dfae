import json
import subprocess
import sys

import pytest

from qtchar.cli import main, parse_factors
from qtchar.errors import ParseError
from qtchar.fusion import FactorSpec


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "qtchar.cli", *argv],
        capture_output=True, text=True)


def test_parse_factors():
    assert parse_factors("1:0,2:1") == [FactorSpec(1, 0), FactorSpec(2, 1)]
    assert parse_factors("1:-2@b") == [FactorSpec(1, -2, "b")]
    with pytest.raises(ParseError):
        parse_factors("1")
    with pytest.raises(ParseError):
        parse_factors("")


def test_fundamental_json(tmp_path):
    out = tmp_path / "d4.json"
    assert main(["fundamental", "--type", "D4", "--node", "2",
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["terms"]) == 28
    coeffs = sorted(tuple(map(tuple, t["coeff"])) for t in doc["terms"])
    assert coeffs.count(((0, 1), (2, 1))) == 1
    assert coeffs.count(((0, 1),)) == 27


def test_standard_with_decode(tmp_path):
    out = tmp_path / "std.json"
    assert main(["standard", "--type", "A2", "--factors", "1:0,2:1",
                 "--decode", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["terms"]) == 8
    annotated = {t["monomial"]: t["jordan"]["blocks"] for t in doc["terms"]}
    assert annotated["2_1 2_3^-1"] == [2]
    assert annotated["1_0 2_1"] == [1]


def test_decode_command(tmp_path):
    src = tmp_path / "chi.json"
    out = tmp_path / "decoded.json"
    main(["standard", "--type", "A2", "--factors", "1:0,1:0",
          "--out", str(src)])
    assert main(["decode", str(src), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    blocks = {t["monomial"]: t["jordan"]["blocks"] for t in doc["terms"]}
    assert blocks["1_0 1_2^-1 2_1"] == [2]
    assert blocks["2_3^-2"] == [1]


def test_decode_single_term_file(tmp_path):
    # a one-term document whose coefficient is 1 + 4t^2 + t^4
    doc = {
        "type": "E6",
        "orbits": ["a"],
        "highest": "3_0",
        "terms": [{"monomial": "3_0", "w": {"3_0": 1}, "v": {},
                   "coeff": [[0, 1], [2, 4], [4, 1]]}],
    }
    src = tmp_path / "one.json"
    src.write_text(json.dumps(doc))
    out = tmp_path / "decoded.json"
    assert main(["decode", str(src), "--out", str(out)]) == 0
    decoded = json.loads(out.read_text())
    assert decoded["terms"][0]["jordan"]["blocks"] == [3, 1, 1, 1]


def test_check_command_pass_and_fail(tmp_path, capsys):
    src = tmp_path / "chi.json"
    main(["fundamental", "--type", "A2", "--node", "1", "--out", str(src)])
    assert main(["check", str(src)]) == 0
    capsys.readouterr()

    doc = json.loads(src.read_text())
    doc["terms"][1]["coeff"] = [[0, 1], [3, 1]]  # odd degree
    src.write_text(json.dumps(doc))
    assert main(["check", str(src)]) == 4
    assert "FAIL" in capsys.readouterr().out


def test_dot_output(tmp_path):
    src = tmp_path / "chi.json"
    out = tmp_path / "chi.dot"
    main(["fundamental", "--type", "D4", "--node", "2", "--out", str(src)])
    assert main(["dot", str(src), "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("digraph")
    assert text.count(" -> ") == 40
    assert '"2_0" -> "1_1 2_2^-1 3_1 4_1" [label="2"];' in text
    assert '"2_2 2_4^-1" [label="(1 + t^2) 2_2 2_4^-1"];' in text


def test_dot_format_direct(tmp_path):
    out = tmp_path / "chi.dot"
    assert main(["fundamental", "--type", "A2", "--node", "1",
                 "--format", "dot", "--out", str(out)]) == 0
    assert out.read_text().count(" -> ") == 2


def test_text_format(capsys):
    assert main(["standard", "--type", "A2", "--factors", "1:0,1:0",
                 "--format", "text", "--decode"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 6
    assert lines[0].split("\t") == ["1_0^2", "1", "1", "1"]
    assert lines[1].split("\t") == ["1_0 1_2^-1 2_1", "1 + t^2", "2", "2"]


def test_byte_identical_runs():
    a = run_cli("fundamental", "--type", "D4", "--node", "2")
    b = run_cli("fundamental", "--type", "D4", "--node", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_exit_codes():
    assert main(["fundamental", "--type", "X4", "--node", "1"]) == 2
    assert main(["fundamental", "--type", "A2", "--node", "7"]) == 2
    assert main(["standard", "--type", "A2", "--factors", "oops"]) == 2
    assert main(["fundamental", "--type", "D4", "--node", "2",
                 "--depth-cap", "2"]) == 3
    assert main(["decode", "/nonexistent/path.json"]) == 2
    proc = run_cli("bogus-command")
    assert proc.returncode == 2


def test_fixtures_command(capsys):
    assert main(["fixtures"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4 and "FAIL" not in out
