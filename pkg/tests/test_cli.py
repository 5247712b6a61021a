"""End-to-end tests for the command-line interface."""
import json
import subprocess
import sys
from pathlib import Path

import pytest

from twocubes import families
from twocubes.cli import main, parse_scalar, scalar_json
from twocubes.exact import SQRT2
from twocubes.forms import BinaryForm

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


# -- literals ---------------------------------------------------------------

def test_parse_scalar_fraction():
    from fractions import Fraction

    assert parse_scalar("3/2") == Fraction(3, 2)
    assert parse_scalar("-4") == Fraction(-4)
    assert parse_scalar("0.25") == Fraction(1, 4)


def test_parse_scalar_complex_pair():
    assert parse_scalar("1.5,-2") == complex(1.5, -2.0)
    assert parse_scalar("0,7.0710678118654755") == complex(0.0, 7.0710678118654755)


def test_parse_scalar_rejects_garbage():
    from twocubes.cli import UsageError

    with pytest.raises(UsageError):
        parse_scalar("bad")
    with pytest.raises(UsageError):
        parse_scalar("1,2,3")


def test_scalar_json_rational_cyclotomic_collapses():
    import fractions

    value = SQRT2 * SQRT2  # rational element of the cyclotomic field
    assert scalar_json(value) == "2"
    assert scalar_json(SQRT2) == {
        "cyclotomic": [str(c) for c in SQRT2.coeffs]
    }
    assert scalar_json(fractions.Fraction(-3, 7)) == "-3/7"
    assert scalar_json(complex(1.0, -2.0)) == [1.0, -2.0]


# -- decompose --------------------------------------------------------------

def test_decompose_octahedral_sextic(capsys):
    code, payload = run_json(capsys, "decompose", "0", "1", "0", "0", "0", "-1", "0")
    assert code == 0
    assert payload["N"] == 6
    assert len(payload["representations"]) == 6
    assert all(rep["residual"] < 1e-9 for rep in payload["representations"])


def test_decompose_obstructed_sextic(capsys):
    code, payload = run_json(capsys, "decompose", "1", "0", "3", "0", "3", "0", "1")
    assert code == 0
    assert payload["N"] == 0
    assert payload["representations"] == []


def test_decompose_wrong_coefficient_count_is_usage_error(capsys):
    code = main(["decompose", "1", "0", "3", "0", "3", "0"])
    capsys.readouterr()
    assert code == 1


def test_decompose_bad_literal_is_usage_error(capsys):
    code = main(["decompose", "1", "0", "0", "bad", "0", "0", "1"])
    err = capsys.readouterr().err
    assert code == 1
    assert "bad" in err


# -- census -----------------------------------------------------------------

def test_census_even_palindromic_counts(capsys):
    code, payload = run_json(capsys, "census", "A", "-5", "-1", "0", "3", "7", "15")
    assert code == 0
    assert payload["generic"] == 2
    assert [cell["N"] for cell in payload["cells"]] == [6, 1, 4, 0, 2, 4]
    assert [cell["exceptional"] for cell in payload["cells"]] == [
        True, True, True, True, False, True,
    ]


def test_census_midcube_counts(capsys):
    code, payload = run_json(capsys, "census", "B", "0", "2", "-2", "1")
    assert code == 0
    assert payload["generic"] == 3
    assert [cell["N"] for cell in payload["cells"]] == [4, 0, 0, 3]


def test_census_midcube_imaginary_exceptional_point(capsys):
    code, payload = run_json(capsys, "census", "B", "0,7.0710678118654755")
    assert code == 0
    assert payload["cells"][0]["N"] == 6
    assert payload["cells"][0]["exceptional"] is True


def test_census_parallel_matches_serial(capsys):
    _, serial = run_cli(capsys, "census", "A", "-5", "-1", "0", "3")
    _, parallel = run_cli(capsys, "--jobs", "2", "census", "A", "-5", "-1", "0", "3")
    assert serial == parallel


def test_census_grid_appends_real_parameters(capsys):
    code, payload = run_json(capsys, "census", "A", "--grid", "6:8:3")
    assert code == 0
    assert [cell["t"] for cell in payload["cells"]] == [[6.0, 0.0], [7.0, 0.0], [8.0, 0.0]]
    assert [cell["N"] for cell in payload["cells"]] == [2, 2, 2]


def test_census_without_values_is_usage_error(capsys):
    code = main(["census", "A"])
    capsys.readouterr()
    assert code == 1


def test_census_unknown_family_is_usage_error(capsys):
    code = main(["census", "C", "1"])
    capsys.readouterr()
    assert code == 1


def test_census_golden_even_palindromic(capsys, regen_golden):
    _, out = run_cli(capsys, "census", "A", "-5", "-1", "0", "3", "7", "15")
    path = GOLDEN / "census_a.json"
    if regen_golden:
        path.write_text(out)
    assert out == path.read_text()


def test_census_golden_midcube(capsys, regen_golden):
    _, out = run_cli(capsys, "census", "B", "0", "2", "-2", "1")
    path = GOLDEN / "census_b.json"
    if regen_golden:
        path.write_text(out)
    assert out == path.read_text()


def test_exact_command_output_is_byte_stable(capsys):
    _, first = run_cli(capsys, "census", "B", "0", "2", "-2", "1")
    _, second = run_cli(capsys, "census", "B", "0", "2", "-2", "1")
    assert first == second
    _, third = run_cli(capsys, "eb", "inverse", "12", "1", "10", "9")
    _, fourth = run_cli(capsys, "eb", "inverse", "12", "1", "10", "9")
    assert third == fourth


# -- verify -----------------------------------------------------------------

def test_verify_full_suite_passes(capsys):
    code, payload = run_json(capsys, "verify")
    assert code == 0
    assert len(payload) == 21
    assert all(entry["pass"] for entry in payload)


def test_verify_subset_and_order(capsys):
    code, payload = run_json(capsys, "verify", "--ids", "05,01,17")
    assert code == 0
    assert [entry["id"] for entry in payload] == ["01", "05", "17"]


def test_verify_unknown_ids_is_usage_error(capsys):
    code = main(["verify", "--ids", "99"])
    capsys.readouterr()
    assert code == 1


def test_verify_failure_exits_three(capsys, monkeypatch):
    def perturbed():
        quads = families.ramanujan_quadruple()
        return (BinaryForm.exact(2, [7, -4, 4]),) + quads[1:]

    monkeypatch.setattr(families, "ramanujan_quadruple", perturbed)
    code, payload = run_json(capsys, "verify", "--ids", "01")
    assert code == 3
    assert payload[0]["pass"] is False


def test_verify_seed_flag_reseeds_sampled_entry(capsys, monkeypatch):
    monkeypatch.setattr(families, "_SAMPLE_SEED", 20240814)
    code, payload = run_json(capsys, "--seed", "7", "verify", "--ids", "21")
    assert code == 0
    assert payload[0]["pass"] is True
    assert families._SAMPLE_SEED == 7


def test_verify_text_format_lines(capsys):
    code, out = run_cli(capsys, "--format", "text", "verify", "--ids", "01,02")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("01 PASS")
    assert lines[1].startswith("02 PASS")


# -- family -----------------------------------------------------------------

def test_family_twisted_sextet_at_two(capsys):
    code, payload = run_json(capsys, "family", "F", "--lambda", "2")
    assert code == 0
    assert len(payload["members"]) == 6
    assert payload["members"][0] == ["8", "-1", "8"]
    assert payload["members"][1] == ["-2", "16", "-2"]
    assert payload["degree"] == 2


def test_family_parametric_requires_lambda(capsys):
    code = main(["family", "F"])
    capsys.readouterr()
    assert code == 1


def test_family_integer_quadruples(capsys):
    code, payload = run_json(capsys, "family", "R")
    assert code == 0
    assert payload["members"] == [
        ["6", "-4", "4"],
        ["3", "5", "-5"],
        ["4", "-4", "6"],
        ["5", "-5", "-3"],
    ]
    code, payload = run_json(capsys, "family", "young")
    assert code == 0
    assert payload["members"][0] == ["1", "16", "-21"]


def test_family_parametric_quartets_accept_lambda(capsys):
    code, payload = run_json(capsys, "family", "hirschhorn", "--lambda", "3")
    assert code == 0
    assert payload["members"][0] == ["3", "162", "-728"]
    code, payload = run_json(capsys, "family", "vieta")
    assert code == 0
    assert payload["degree"] == 4


def test_family_unknown_is_usage_error(capsys):
    code = main(["family", "Z"])
    capsys.readouterr()
    assert code == 1


# -- type-detect ------------------------------------------------------------

def test_type_detect_integer_quadruple(capsys):
    code, payload = run_json(
        capsys,
        "type-detect",
        "3", "5", "-5", "5", "-5", "-3", "6", "-4", "4", "-4", "4", "-6",
    )
    assert code == 0
    assert payload["T"] == "4"
    assert "T*(" in payload["arrangement"]


def test_type_detect_rejects_unequal_sums(capsys):
    code = main([
        "type-detect",
        "1", "0", "0", "0", "0", "1", "1", "0", "0", "0", "0", "2",
    ])
    capsys.readouterr()
    assert code == 2


# -- eb ---------------------------------------------------------------------

def test_eb_forward_integer_instance(capsys):
    code, payload = run_json(capsys, "eb", "forward", "-3/2", "1/2", "1")
    assert code == 0
    assert (payload["f1"], payload["f2"], payload["f3"], payload["f4"]) == (
        "10", "-1", "-9", "12",
    )
    assert payload["p"] == "999"
    assert payload["degenerate"] is False


def test_eb_inverse_instances(capsys):
    code, payload = run_json(capsys, "eb", "inverse", "10", "-1", "-9", "12")
    assert code == 0
    assert (payload["a"], payload["b"], payload["mu"]) == ("-3/2", "1/2", "1")
    code, payload = run_json(capsys, "eb", "inverse", "12", "1", "10", "9")
    assert code == 0
    assert (payload["a"], payload["b"], payload["mu"]) == ("10/19", "7/19", "361/42")


def test_eb_third_representation(capsys):
    code, payload = run_json(capsys, "eb", "third", "-3/2", "1/2", "1")
    assert code == 0
    assert (payload["h1"], payload["h2"]) == ("-8", "6")


def test_eb_dishonest_quadruple_is_computation_failure(capsys):
    code = main(["eb", "inverse", "1", "2", "1", "2"])
    err = capsys.readouterr().err
    assert code == 2
    assert "honest" in err


def test_eb_wrong_arity_is_usage_error(capsys):
    code = main(["eb", "forward", "1", "2"])
    capsys.readouterr()
    assert code == 1


# -- curve-add --------------------------------------------------------------

def test_curve_add_taxicab_chord(capsys):
    code, payload = run_json(capsys, "curve-add", "1", "12", "9", "10", "1729")
    assert code == 0
    assert (payload["x3"], payload["y3"]) == ("-37/3", "46/3")


def test_curve_add_degenerate_chord_is_computation_failure(capsys):
    code = main(["curve-add", "1", "12", "1", "12", "1729"])
    err = capsys.readouterr().err
    assert code == 2
    assert "chord" in err


def test_curve_add_off_curve_point_is_computation_failure(capsys):
    code = main(["curve-add", "1", "11", "9", "10", "1729"])
    capsys.readouterr()
    assert code == 2


# -- harness ----------------------------------------------------------------

def test_missing_command_is_usage_error(capsys):
    code = main([])
    capsys.readouterr()
    assert code == 1


def test_unknown_command_is_usage_error(capsys):
    code = main(["frobnicate"])
    capsys.readouterr()
    assert code == 1


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "twocubes.cli", "curve-add", "1", "12", "9", "10", "1729"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"x3": "-37/3", "y3": "46/3"}


def test_text_format_census(capsys):
    code, out = run_cli(capsys, "--format", "text", "census", "A", "7", "15")
    assert code == 0
    assert "generic N = 2" in out
    assert "t = 15: N = 4  *" in out
