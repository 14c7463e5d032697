"""Command-line front end: dispatch, exit codes, JSON determinism."""

import json

import pytest

from cuntzalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normal(capsys):
    code, out, _ = run(capsys, "normal", "s1' s1")
    assert code == 0
    assert out.strip() == "1"


def test_normal_json(capsys):
    code, out, _ = run(capsys, "normal", "s1 s2' + s2 s1'", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 2,
                               "terms": [["1", "2", "1"], ["2", "1", "1"]]}


def test_json_deterministic(capsys):
    _, first, _ = run(capsys, "normal", "1/2 (s1+s2)(s1'+s2')", "--json")
    _, second, _ = run(capsys, "normal", "1/2 (s1+s2)(s1'+s2')", "--json")
    assert first == second


def test_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "eq", "s1' s1", "1")
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "eq", "s1", "s2")
    assert (code, out.strip()) == (1, "false")


def test_usage_error(capsys):
    code, _, err = run(capsys, "normal", "")
    assert code == 2
    assert "position 0" in err


def test_bad_morphism_name(capsys):
    code, _, err = run(capsys, "apply", "s1", "--endo", "nosuch")
    assert code == 2
    assert "nosuch" in err


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "s1s1'", "--endo", "psi:142",
                       "--json")
    assert code == 0
    assert json.loads(out)["terms"] == [["11", "11", "1"], ["22", "22", "1"]]


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--rep", "P(12)", "--endo",
                       "psi:142")
    assert code == 0
    assert out.strip() == "P(11) (+) P(22)"


def test_branch_uhf(capsys):
    code, out, _ = run(capsys, "branch", "--rep", "P[12]", "--endo",
                       "psi:14")
    assert code == 0
    assert out.strip() == "P[12] (+) P[12]"


def test_branch_power_decomposition(capsys):
    code, out, _ = run(capsys, "branch", "--rep", "P(11)")
    assert code == 0
    assert out.strip() == "P(1) (+) P(1;1/2)"


def test_branch_nakanishi(capsys):
    code, out, _ = run(capsys, "branch", "--rep", "P(1)", "--endo",
                       "nakanishi", "--n", "3")
    assert code == 0
    assert out.strip() == "P(12) (+) P(3)"


def test_restrict_cycle(capsys):
    code, out, _ = run(capsys, "restrict", "--rep", "P(12)")
    assert code == 0
    assert out.strip() == "P[12] (+) P[21]"


def test_restrict_chain(capsys):
    code, out, _ = run(capsys, "restrict", "--rep", "(12)^inf",
                       "--eta-min", "-2", "--eta-max", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [s["label"] for s in payload["shifts"]] == \
        ["11(12)^inf", "1(12)^inf", "(12)^inf", "(21)^inf", "(12)^inf"]


def test_gp(capsys):
    code, out, _ = run(capsys, "gp", "--endo", "psi:132")
    assert code == 0
    assert out.strip() == "GP(+) (+) GP(-).theta"
    code, out, _ = run(capsys, "gp", "--endo", "psi:13")
    assert code == 0
    assert out.strip() == "not derivable"


def test_car(capsys):
    code, out, _ = run(capsys, "car", "--check-modes", "4")
    assert (code, out.strip()) == (0, "pass")
    code, out, _ = run(capsys, "car", "a1")
    assert code == 0
    assert out.strip() == "s1s2'"


def test_mixture(capsys):
    code, out, _ = run(capsys, "mixture", "1/2")
    assert code == 0
    assert "a3" in out
    code, out, _ = run(capsys, "mixture", "-3/2", "--json")
    assert code == 0
    assert json.loads(out)["index"] == "-3/2"
    code, out, _ = run(capsys, "mixture", "3/2", "--check")
    assert (code, out.strip()) == (0, "pass")


def test_vacuum(capsys):
    code, out, _ = run(capsys, "vacuum", "fock", "--max-mode", "4")
    assert (code, out.strip()) == (0, "pass")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "table4")
    assert code == 0
    assert "table4" in out
    code, out, _ = run(capsys, "verify", "nakanishi", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_unknown_table():
    with pytest.raises(SystemExit) as err:
        main(["verify", "table5"])
    assert err.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--level", "2", "--json")
    assert code == 0
    counts = json.loads(out)["counts"]
    assert counts["classes"] == 12
    assert counts["restrictions"] == 20
