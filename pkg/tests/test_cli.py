import json

import pytest

from cotame.cli import EMITTABLE, build_parser, main


def test_emit_f(capsysbinary):
    assert main(["emit", "f"]) == 0
    assert capsysbinary.readouterr().out == b"x1*x3 - x2^2\n"


@pytest.mark.parametrize("name", sorted(EMITTABLE))
def test_emit_every_object(name, capsysbinary):
    assert main(["emit", name]) == 0
    assert capsysbinary.readouterr().out.endswith(b"\n")


def test_emit_structured(capsysbinary):
    assert main(["emit", "phi", "--format", "structured"]) == 0
    data = json.loads(capsysbinary.readouterr().out)
    assert data


def test_foundations_report_file(tmp_path, capsysbinary):
    path = tmp_path / "out.json"
    assert main(["foundations", "--report", str(path)]) == 0
    out = capsysbinary.readouterr().out.decode()
    assert out.rstrip().endswith("7/7 reports pass")
    data = json.loads(path.read_bytes())
    assert [r["status"] for r in data] == ["pass"] * 7


def test_flags_before_or_after_subcommand(tmp_path):
    parser = build_parser()
    a = parser.parse_args(["--report", "x", "--timing", "centralizer"])
    b = parser.parse_args(["centralizer", "--report", "x", "--timing"])
    assert (a.report, a.timing) == (b.report, b.timing) == ("x", True)
    assert parser.parse_args(["centralizer"]).timing is False


def test_lemma_subcommand(capsysbinary):
    assert main(["lemma", "L3.32"]) == 0
    assert b"L3.32: pass" in capsysbinary.readouterr().out


def test_lemma_numeric(capsysbinary):
    assert main(["lemma", "L2.B", "--numeric", "--seed", "3", "--trials", "2"]) == 0
    assert b"L2.B numeric: pass" in capsysbinary.readouterr().out


def test_unknown_case_exit_code(capsys):
    assert main(["lemma", "L9"]) == 2
    assert "unknown case" in capsys.readouterr().err


def test_theorem1_s1(capsysbinary):
    assert main(["theorem1", "--s", "1", "--seed", "4"]) == 0
    assert b"1/1 reports pass" in capsysbinary.readouterr().out


def test_failing_budget_exits_nonzero(capsysbinary):
    # theta(x1) has far more than ten terms, so the full expansion fails
    assert main(["theorem1", "--s", "2", "--budget", "10"]) == 1
    out = capsysbinary.readouterr().out
    assert b"BudgetExceeded" in out and b"failing: theorem1 s=2" in out


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["emit", "nothing"])
    with pytest.raises(SystemExit):
        main([])
