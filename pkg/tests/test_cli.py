import io
import json
import subprocess
import sys

import pytest

from absolute_cgt.cli import main

VERDICTS = {"G=H", "G>H", "G<H", "G<>H"}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compare_example():
    assert run("compare", "-u", "dicot-misere", "{0,*|*}", "0") == (0, "G>H\n")


@pytest.mark.parametrize("g", ["0", "*", "{0,*|*}", "mown*"])
def test_compare_self(g):
    assert run("compare", "-u", "dicot-misere", g, g) == (0, "G=H\n")


def test_verdict_strings():
    pairs = [("0", "*"), ("mup", "0"), ("0", "mup"), ("*", "*")]
    got = {run("compare", "-u", "dicot-misere", g, h)[1].strip() for g, h in pairs}
    assert got == VERDICTS


def test_explain():
    code, out = run("compare", "-u", "dicot-misere", "up", "0", "--explain")
    assert code == 0
    assert out.splitlines()[0] == "G<>H"
    assert "Proviso fails: o(G)=R ≱ o(H)=N" in out


def test_oracle():
    code, out = run("compare", "-u", "dicot-misere", "up", "0", "--oracle", "--max-rank", "1")
    assert "oracle: agrees" in out
    assert "distinguish G>=H: X = 0" in out
    assert "CONTRADICTS" not in out


def test_outcome():
    assert run("outcome", "-u", "dicot-misere", "*") == (0, "P\n")
    assert run("outcome", "-u", "dicot-scoring", "<^3|^-1>") == (0, "(3, -1)\n")


def test_lpg():
    assert run("lpg", "-u", "dicot-misere", "mup", "0", "--canonical") == (0, "↑\n")
    code, out = run("lpg", "-u", "dicot-misere", "mup", "0", "--tree", "dot")
    assert code == 0 and out.startswith("digraph lpg")


def test_hasse_json():
    code, out = run("hasse", "-u", "dicot-misere", "--max-rank", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["nodes"]) == 9 and len(data["edges"]) == 12


def test_category():
    code, out = run("category", "--verify-laws", "-u", "dicot-misere", "--max-rank", "2")
    assert code == 0 and "laws hold" in out
    code, out = run("category", "-u", "dicot-misere", "--witness", "mup*", "down", "mown")
    assert code == 0 and "valid: True" in out


def test_exit_codes(capsys):
    assert run("compare", "-u", "dicot-misere", "{0|}", "0")[0] == 1
    assert run("compare", "-u", "dicot-misere", "{0|", "0")[0] == 2
    assert run("hasse", "-u", "dicot-misere", "--max-rank", "9")[0] == 2
    assert "parse error" in capsys.readouterr().err


def test_batch(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("mup\t0\n0\t0\n\n{0|\t0\n"))
    code, out = run("compare", "-u", "dicot-misere", "--batch")
    assert out == "G>H\nG=H\nerror\n" and code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "absolute_cgt", "outcome", "-u",
                           "dicot-misere", "up"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "R\n"
