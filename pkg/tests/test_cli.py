"""End-to-end tests of the command-line surface."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from lagcut.cli import (
    main,
    parse_candidate,
    parse_range,
    parse_rational,
    render_pi,
    render_plain,
    round_float,
    run,
)


def run_json(argv):
    code, out = run(argv + ["--format", "json"])
    return code, json.loads(out)


def assert_roundtrip(out):
    # canonical form: re-rendering the parsed document is byte identical
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ classes


def test_classes_json_document():
    code, doc = run_json(["classes", "--euler", "1", "--level", "-1/2"])
    assert code == 0
    assert doc == {
        "K_L": {"den": 2, "num": 1, "unit": "pi"},
        "K_W": {"den": 1, "num": 1, "unit": "pi"},
        "N_V": 2,
        "N_W": 1,
        "dim": 3,
        "disc_area": {"den": 1, "num": 1, "unit": "pi"},
        "euler": 1,
        "level": {"den": 2, "num": -1},
        "monotone": True,
        "monotone_constant": {"den": 2, "num": 1, "unit": "pi"},
        "omega_W": {"den": 1, "num": 1, "unit": "pi"},
        "pi1_total": "trivial",
        "pi2_rel": "Z",
        "reduced_c1_real": {"den": 1, "num": 0},
        "reduced_omega": {"den": 1, "num": 1, "unit": "pi"},
    }


def test_classes_text_renders_rationals_in_pi_units():
    code, out = run(["classes", "--euler", "1", "--level", "-1/2"])
    assert code == 0
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["K_W"] == "1·π"
    assert lines["K_L"] == "1/2·π"
    assert lines["N_V"] == "2"
    assert lines["pi2_rel"] == "Z"
    assert lines["level"] == "-1/2"


def test_classes_decimal_level_matches_fraction_level():
    _, doc_a = run_json(["classes", "--euler", "2", "--level", "-0.5"])
    _, doc_b = run_json(["classes", "--euler", "2", "--level", "-1/2"])
    assert doc_a == doc_b


def test_classes_rejects_nonnegative_level():
    code, out = run(["classes", "--euler", "1", "--level", "1/2"])
    assert code == 2
    assert "not-monotone-level" in out


def test_classes_rejects_bad_rational():
    for bad in ("abc", "1/0"):
        code, out = run(["classes", "--euler", "1", "--level", bad])
        assert code == 1


def test_classes_json_roundtrip():
    _, out = run(["classes", "--euler", "3", "--level", "-2/3", "--format", "json"])
    assert_roundtrip(out)


# ----------------------------------------------------------------- identity


def test_identity_computed_table():
    code, doc = run_json(["identity", "--d", "8", "--modulus", "4"])
    assert code == 0
    assert doc["S"] == [72, 64, 56, 64]
    assert doc["NS0"] == 288
    assert doc["pow"] == 256
    assert doc["holds"] is False
    assert doc["residual"] < 1e-9


def test_identity_text_and_json_agree():
    _, doc = run_json(["identity", "--d", "8", "--modulus", "4"])
    code, text = run(["identity", "--d", "8", "--modulus", "4"])
    assert code == 0
    for value in doc["S"] + [doc["NS0"], doc["pow"]]:
        assert str(value) in text
    assert "identity holds: false" in text


def test_identity_holding_case():
    _, doc = run_json(["identity", "--d", "3", "--modulus", "2"])
    assert doc["holds"] is True
    assert doc["S"] == [4, 4]


def test_identity_rejects_odd_modulus():
    code, out = run(["identity", "--d", "5", "--modulus", "3"])
    assert code == 1
    assert "even" in out


def test_identity_json_roundtrip():
    _, out = run(["identity", "--d", "16", "--modulus", "8", "--format", "json"])
    assert_roundtrip(out)


# --------------------------------------------------------------------- fold


def test_fold_specifier_kinds():
    cases = {
        "sphere:d=7": [1, 0, 1, 0, 0],
        "torus:d=3": [2, 3, 3],
        "prodsph:l=2,m=4": [2, 1, 1],
        "cp:n=2": [1, 1, 1],
        "custom:betti=[1,0,2,0,1],gens=[2,2]": [1, 1, 2],
    }
    for spec, expected in cases.items():
        code, doc = run_json(["fold", "--candidate", spec, "--modulus", str(len(expected))])
        assert code == 0, spec
        assert doc["S"] == expected, spec


def test_fold_reports_periodicity():
    _, doc = run_json(["fold", "--candidate", "sphere:d=6", "--modulus", "4"])
    assert doc["S"] == [1, 0, 1, 0]
    assert doc["two_periodic"] is True
    assert doc["total"] == 2


def test_fold_rejects_bad_specifiers():
    for spec in ("sphere", "sphere:d=x", "blob:d=2", "custom:betti=[1,2", "sphere:d"):
        code, _ = run(["fold", "--candidate", spec, "--modulus", "2"])
        assert code == 1, spec


# -------------------------------------------------------------------- check


def test_check_sphere_obstructed_json():
    code, doc = run_json(["check", "sphere", "--d", "5", "--euler", "4", "--grading", "8"])
    assert code == 0
    assert doc["status"] == "Obstructed"
    assert doc["constraints"] is None
    assert doc["trace"][-1]["cite"] == "fold-two-periodicity"


def test_check_lens_matches_documented_shape():
    code, doc = run_json(["check", "lens", "--p", "7", "--n", "3"])
    assert code == 0
    assert doc["status"] == "Constrained"
    assert doc["constraints"] == {"m": [1]}


def test_check_exact_with_surjectivity():
    code, doc = run_json(
        ["check", "exact", "--d", "7", "--euler", "6", "--surjectivity"]
    )
    assert code == 0
    assert doc["constraints"]["m"] == [1]
    assert doc["constraints"]["surjectivity_rule_applied"] is True


def test_check_torus_text_mode():
    code, out = run(["check", "torus", "--d", "3", "--euler", "2"])
    assert code == 0
    assert "status: Constrained" in out
    assert "N = [2]" in out


def test_check_violation_exit_code_and_cite():
    code, out = run(["check", "sphere", "--d", "5", "--euler", "4", "--grading", "3"])
    assert code == 2
    assert "grading-divides-twice-chern" in out

    code, doc = run_json(["check", "sphere", "--d", "5", "--euler", "4", "--grading", "3"])
    assert code == 2
    assert doc["error"]["cite"] == "grading-divides-twice-chern"


def test_check_requires_target():
    code, _ = run(["check"])
    assert code == 1


def test_check_json_roundtrip():
    _, out = run(
        ["check", "prodsph", "--l", "2", "--m", "4", "--euler", "8", "--format", "json"]
    )
    assert_roundtrip(out)


# --------------------------------------------------------------------- scan


def test_scan_json_rows_and_order():
    code, doc = run_json(["scan", "--family", "lens", "--p", "2..3", "--n", "1"])
    assert code == 0
    assert doc["family"] == "lens"
    assert [r["params"] for r in doc["rows"]] == [
        {"p": 2, "n": 1},
        {"p": 3, "n": 1},
    ]
    assert doc["rows"][0]["verdict"]["constraints"] == {"m": [1, 2]}


def test_scan_sphere_default_grading():
    _, doc = run_json(["scan", "--family", "sphere", "--d", "5..6", "--euler", "4"])
    assert all(r["params"]["grading"] == 8 for r in doc["rows"])


def test_scan_violation_rows_exit_two():
    code, doc = run_json(
        ["scan", "--family", "sphere", "--d", "5", "--euler", "2", "--grading", "3"]
    )
    assert code == 2
    assert doc["rows"][0]["error"]["cite"] == "grading-divides-twice-chern"
    assert doc["rows"][0]["verdict"] is None


def test_scan_text_mode_lists_rows():
    code, out = run(["scan", "--family", "torus", "--d", "2..3", "--euler", "1"])
    assert code == 0
    assert 'd=2 euler=1 :: Constrained {"N": [2]}' in out
    assert "rows: 2  errors: 0" in out


def test_scan_usage_errors():
    code, _ = run(["scan", "--family", "lens", "--p", "2..4"])
    assert code == 1
    code, _ = run(["scan", "--family", "lens", "--p", "4..2", "--n", "1"])
    assert code == 1
    code, _ = run(["scan", "--family", "nope", "--d", "2"])
    assert code == 1


def test_scan_json_roundtrip():
    _, out = run(
        ["scan", "--family", "exact", "--d", "6..8", "--euler", "4", "--format", "json"]
    )
    assert_roundtrip(out)


# -------------------------------------------------------------------- batch


def write_batch(tmp_path, entries):
    path = tmp_path / "batch.json"
    path.write_text(json.dumps(entries))
    return str(path)


def test_batch_runs_entries_in_order(tmp_path):
    path = write_batch(
        tmp_path,
        [
            {"command": "check", "args": ["lens", "--p", "7", "--n", "3"]},
            {"command": "check", "args": ["sphere", "--d", "5", "--euler", "4", "--grading", "3"]},
            {"command": "classes", "args": ["--euler", "1", "--level", "-1/2"]},
        ],
    )
    code, out = run(["--batch", path])
    assert code == 2  # max of 0, 2, 0
    assert_roundtrip(out)
    report = json.loads(out)
    assert [entry["exit"] for entry in report] == [0, 2, 0]
    assert report[0]["report"]["status"] == "Constrained"
    assert report[1]["report"]["error"]["cite"] == "grading-divides-twice-chern"
    assert report[2]["report"]["N_V"] == 2


def test_batch_empty_is_empty_report(tmp_path):
    path = write_batch(tmp_path, [])
    code, out = run(["--batch", path])
    assert code == 0
    assert out == "[]\n"


def test_batch_validates_before_running(tmp_path):
    path = write_batch(
        tmp_path,
        [
            {"command": "check", "args": ["lens", "--p", "7", "--n", "3"]},
            {"command": "check", "args": ["lens", "--p", "7", "--bogus"]},
        ],
    )
    code, out = run(["--batch", path])
    assert code == 1
    assert "entry 1" in out


def test_batch_rejects_malformed_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _ = run(["--batch", str(path)])
    assert code == 1

    path2 = tmp_path / "object.json"
    path2.write_text('{"command": "classes"}')
    code, _ = run(["--batch", str(path2)])
    assert code == 1


def test_batch_rejects_missing_file(tmp_path):
    code, _ = run(["--batch", str(tmp_path / "absent.json")])
    assert code == 1


def test_batch_excludes_direct_subcommand(tmp_path):
    path = write_batch(tmp_path, [])
    code, _ = run(["--batch", path, "identity", "--d", "2", "--modulus", "2"])
    assert code == 1


def test_batch_level_tokens_merge(tmp_path):
    # a leading-dash rational inside batch args must parse
    path = write_batch(
        tmp_path, [{"command": "classes", "args": ["--euler", "2", "--level", "-1/3"]}]
    )
    code, out = run(["--batch", path])
    assert code == 0
    assert json.loads(out)[0]["report"]["K_L"] == {"den": 3, "num": 1, "unit": "pi"}


# ------------------------------------------------------------------ plumbing


def test_no_arguments_is_usage_error():
    code, out = run([])
    assert code == 1
    assert "usage" in out


def test_unknown_subcommand_is_usage_error():
    code, _ = run(["frobnicate"])
    assert code == 1


def test_main_writes_stdout_and_returns_code(capsys):
    code = main(["identity", "--d", "4", "--modulus", "2"])
    assert code == 0
    captured = capsys.readouterr()
    assert "identity holds: true" in captured.out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lagcut.cli", "check", "lens", "--p", "7", "--n", "3",
         "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["constraints"] == {"m": [1]}


# ------------------------------------------------------------------- helpers


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range(" 3..3 ") == [3]
    for bad in ("5..2", "x", "1..y", ""):
        with pytest.raises(ValueError):
            parse_range(bad)


def test_parse_rational():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_parse_candidate_labels():
    assert parse_candidate("sphere:d=7").label == "sphere:d=7"
    assert parse_candidate("prodsph:l=2,m=4").betti == (1, 0, 1, 0, 1, 0, 1)
    custom = parse_candidate("custom:betti=[1,0,2,0,1],gens=[2,2]")
    assert custom.dim == 4
    with pytest.raises(ValueError):
        parse_candidate("custom:betti=[1,0,1],gens=[true]")


def test_rational_rendering():
    assert render_pi(Fraction(1, 2)) == "1/2·π"
    assert render_pi(Fraction(-3)) == "-3·π"
    assert render_pi(Fraction(0)) == "0"
    assert render_plain(Fraction(-1, 2)) == "-1/2"
    assert render_plain(Fraction(4)) == "4"


def test_round_float():
    assert round_float(0.123456789123) == 0.123456789
    assert round_float(1e-17) == 1e-17
