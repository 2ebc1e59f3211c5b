import json

import pytest

from extbloch.cli import main

FIXTURES = "tests/fixtures"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_info(capsys):
    code, out, _ = run(capsys, ["field", "info",
                                f"{FIXTURES}/field_example.json",
                                "--precision", "30"])
    assert code == 0
    assert "degree: 4" in out
    assert "torsion_order: 6" in out
    assert "torsion_generator: [1, -1, 0, -1]" in out
    assert "automorphisms: 4" in out
    assert "-0.1217444141248" in out and "1.3066224027501" in out


def test_torsion_table(capsys):
    code, out, _ = run(capsys, ["torsion", "table",
                                f"{FIXTURES}/field_rationals.json"])
    assert code == 0
    assert "w: 24" in out
    assert "2: 2" in out and "3: 1" in out and "5: 0" in out


def test_torsion_generators(capsys):
    code, out, _ = run(capsys, ["torsion", "generators",
                                f"{FIXTURES}/field_rationals.json",
                                "--prime", "3"])
    assert code == 0
    assert "2*[[-2]] + 1*[[1/4]]" in out


def test_torsion_order(capsys):
    code, out, _ = run(capsys, ["torsion", "order",
                                f"{FIXTURES}/field_sqrt2.json",
                                "--prime", "2"])
    assert code == 0
    assert "order: 16" in out


def test_bloch_verify(capsys):
    code, out, _ = run(capsys, ["bloch", "verify",
                                f"{FIXTURES}/element_example.json"])
    assert code == 0
    assert "in_B: True" in out
    assert "in_Bhat: True" in out


def test_bloch_regulator_symmetric(capsys):
    code, out, _ = run(capsys, ["bloch", "regulator",
                                f"{FIXTURES}/element_example.json",
                                "--precision", "30", "--symmetric-range"])
    assert code == 0
    assert "range=symmetric" in out
    assert "-7.4532295470253" in out
    assert "- 2.3126354032530" in out


def test_fiveterm_check(capsys):
    code, out, _ = run(capsys, ["fiveterm", "check",
                                f"{FIXTURES}/fiveterm_rational.json",
                                "--precision", "30"])
    assert code == 0
    assert "wedge_zero: True" in out
    assert "regulator_zero: True" in out


def test_cycle_invariant(capsys):
    code, out, _ = run(capsys, ["cycle", "invariant",
                                f"{FIXTURES}/figure_eight.json",
                                "--precision", "30"])
    assert code == 0
    assert "2.0298832128193" in out
    assert "matches: True" in out


def test_output_is_deterministic(capsys):
    argv = ["bloch", "regulator", f"{FIXTURES}/element_example.json",
            "--precision", "30"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_json_output(capsys):
    code, out, _ = run(capsys, ["torsion", "table",
                                f"{FIXTURES}/field_rationals.json",
                                "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["w"] == 24
    assert payload["config"]["precision"] == 50
    assert out == json.dumps(payload, sort_keys=True, indent=1) + "\n"


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, ["field", "info", "/no/such/file.json"])
    assert code == 2
    assert "input error" in err


def test_low_precision_rejected(capsys):
    code, _, err = run(capsys, ["field", "info",
                                f"{FIXTURES}/field_rationals.json",
                                "--precision", "5"])
    assert code == 2
    assert "precision" in err


def test_math_error_exit_code(capsys):
    code, _, err = run(capsys, ["torsion", "order",
                                f"{FIXTURES}/field_rationals.json",
                                "--prime", "7"])
    assert code == 3
    assert "math error" in err
