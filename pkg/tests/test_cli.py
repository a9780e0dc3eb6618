from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from cycpres import cli
from cycpres.special import TheoremVerdict, Verdict


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_erratum_word_text():
    code, text = run("analyze", "-n", "4", "-w", "x0 x2^-1 x3 x1^-1")
    assert code == 0
    assert "kind: non_orientable" in text
    assert "phi^1(w) = u theta^2(u)^-1 with u = x2^-1 x3" in text


def test_analyze_json():
    code, text = run("analyze", "-n", "4", "-w", "x0 x2^-1 x3 x1^-1", "-o", "json")
    data = json.loads(text)
    assert (code, data["kind"], data["rotation"]) == (0, "non_orientable", 1)


def test_analyze_period_text():
    _, text = run("analyze", "-n", "14", "-w", "x0 x1 x10 x7 x8 x3")
    assert "period: u = x0 x1 x10, theta^7" in text
    assert "P_{14,7}" in text


def test_refine():
    code, text = run("refine", "-n", "14", "-w", "x0 x1 x10 x7 x8 x3", "-o", "json")
    data = json.loads(text)
    assert (code, data["t"], data["deficiency"], len(data["relators"])) == (0, 7, 7, 7)
    _, text = run("refine", "-n", "3", "-w", "x0 x1")
    assert text.splitlines()[0] == "P_{3,3}: deficiency 0"
    assert text.splitlines()[1] == "theta^0: x0 x1"


def test_special_a_ii():
    code, text = run("special", "-n", "14", "-w", "x0 x1 x10 x7 x8 x3")
    data = json.loads(text)
    assert code == 0
    assert (data["special"], data["m"], data["k"], data["nu"]) == (True, 3, 6, 2)
    assert [c["recognized_as"] for c in data["components"]] == ["Heawood", "Heawood"]
    assert data["theorem_checker"]["verdict"] == "special"
    assert data["agree"] is True


def test_special_text_shows_both_verdicts():
    code, text = run("special", "-n", "9", "-w", "x0 x1 x5 x3 x4 x8 x6 x7 x2", "-o", "text")
    assert code == 0
    assert "direct:  (2,9,3)-special" in text
    assert "criterion: orientable-positive-2: special (2, 9, 3)" in text


def test_special_disagreement_exits_1(monkeypatch):
    fake = TheoremVerdict("orientable-positive-3", Verdict.SPECIAL, 3, 6, 1)
    monkeypatch.setattr(cli, "theorem_verdict", lambda P: fake)
    code, text = run("special", "-n", "14", "-w", "x0 x1 x10 x7 x8 x3")
    assert code == 1 and json.loads(text)["agree"] is False


def test_stargraph_dot_e():
    code, text = run("stargraph", "-n", "6", "-w", "x0 x1^-1 x0 x3^-1 x4 x3^-1", "-o", "dot")
    assert code == 0 and text.startswith("graph star {")
    assert text.count(" -- ") == 18
    assert "color=red" in text and "color=black" in text


def test_stargraph_text_and_json():
    _, text = run("stargraph", "-n", "6", "-w", "x0 x1^-1 x0 x3^-1 x4 x3^-1", "-o", "text")
    assert "components: K_{3,3}, K_{3,3}" in text
    data = json.loads(run("stargraph", "-n", "6", "-w", "x0 x1^-1 x0 x3^-1 x4 x3^-1")[1])
    assert data["components"] == 2 and data["girth"] == 4


def test_output_is_byte_stable():
    argv = ("special", "-n", "12", "-w", "x0 x2^-1 x4 x7 x2 x1 x7^-1 x8^-1 x1^-1 x10^-1 x8 x6^-1")
    assert run(*argv) == run(*argv)


def test_search_positive_fano():
    code, text = run("search", "--n-range", "7..7", "--k-range", "3..3", "--positive-only", "--up-to-symmetry")
    lines = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert lines[-1]["summary"]["hits"] == len(lines) - 1 > 0
    assert all(row["m"] == 3 and row["nu"] == 1 for row in lines[:-1])


def test_search_crossvalidate():
    code, text = run("search", "--n-range", "2..3", "--k-range", "2..4", "--up-to-symmetry", "--crossvalidate")
    trailer = json.loads(text.splitlines()[-1])["summary"]
    assert code == 0 and trailer["counterexamples"] == 0 and trailer["words"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "-n", "4"],
        ["analyze", "-n", "2", "-w", "x0 x0^-1"],
        ["analyze", "-n", "2", "-w", "y1"],
        ["search", "--n-range", "1..9", "--k-range", "1..12", "--budget", "1000"],
        ["search", "--k-range", "1..2"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "cycpres: error:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["bogus"], ["search", "--n-range", "5..2"], ["analyze", "-o", "dot"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_selftest_fixtures_prints_one_line_per_criterion():
    code, text = run("selftest", "--fixtures")
    lines = text.splitlines()
    assert len(lines) == 5
    assert all(line.startswith(("PASS ", "FAIL ")) for line in lines)
    assert code == (0 if all(line.startswith("PASS") for line in lines) else 1)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cycpres.cli", "analyze", "-n", "3", "-w", "x0 x1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "kind: concise" in proc.stdout
