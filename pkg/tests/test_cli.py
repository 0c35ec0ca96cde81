import json

import pytest

from walc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def no_floats(value):
    if isinstance(value, float):
        return False
    if isinstance(value, dict):
        return all(no_floats(v) for v in value.values())
    if isinstance(value, list):
        return all(no_floats(v) for v in value)
    return True


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "--partition", "3,1,1")
    assert code == 0
    assert "hook (m=3, n=2)" in out
    assert "(1, 0, 0, 1)" in out
    assert "central charge" in out


def test_info_bad_partition(capsys):
    code, _, err = run_cli(capsys, "info", "--partition", "0,1")
    assert code == 2
    assert "bad partition" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("info", "--partition", "2,2"),
        ("info", "--partition", "3,2,1"),
        ("levels", "--hook", "4", "3"),
        ("collapse", "--hook", "3", "3", "--level", "-7/2"),
        ("admissible", "--rect", "2", "3", "--level", "-5/2"),
        ("decompose", "--hook", "4", "3", "--case", "2", "--range", "1"),
        ("verify-paper", "--only", "heights"),
    ],
    ids=lambda argv: argv[0] if isinstance(argv, tuple) else argv,
)
def test_json_round_trip_and_exactness(capsys, argv):
    code, out, _ = run_cli(capsys, "--json", *argv)
    assert code == 0
    data = json.loads(out)
    assert no_floats(data)
    redumped = json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    assert redumped == out


def test_levels_command(capsys):
    code, out, _ = run_cli(capsys, "--json", "levels", "--hook", "3", "2")
    assert code == 0
    data = json.loads(out)
    rows = {row["k"]: row for row in data["levels"]}
    assert set(rows) == {"-15/4", "-3", "-10/3"}
    assert rows["-3"]["tags"] == ["H2", "H3"]
    assert rows["-10/3"]["branch"] == "degenerate"
    assert no_floats(data)


def test_collapse_command(capsys):
    code, out, _ = run_cli(capsys, "collapse", "--rect", "2", "3", "--level", "-4")
    assert code == 0
    assert "strongly-collapsing" in out
    assert "V_-2(sl(3))" in out


def test_collapse_not_conformal(capsys):
    code, out, _ = run_cli(capsys, "collapse", "--hook", "3", "2", "--level", "1")
    assert code == 1
    assert "not a conformal level" in out
    # both central charges are surfaced
    assert "!=" in out


def test_collapse_bad_level(capsys):
    code, _, err = run_cli(capsys, "collapse", "--hook", "3", "2", "--level", "0.5x")
    assert code == 2
    assert "bad level" in err


def test_admissible_command(capsys):
    code, out, _ = run_cli(capsys, "--json", "admissible", "--hook", "3", "2", "--level", "-15/4")
    assert code == 0
    data = json.loads(out)
    assert data["shift"] == {"p_prime": 5, "p": 4}
    assert data["admissible"] is True
    assert data["ideal_generator_weight"] == "2"


def test_decompose_command(capsys):
    code, out, _ = run_cli(capsys, "--json", "decompose", "--hook", "4", "3", "--case", "1")
    assert code == 0
    data = json.loads(out)
    assert [s["charge"] for s in data["summands"]] == [-2, -1, 0, 1, 2]
    assert data["summands"][4]["sl_top_conformal_weight"] == "25/3"


def test_decompose_refusal(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--hook", "3", "2", "--case", "1")
    assert code == 0
    assert "refused" in out


def test_missing_family_flag(capsys):
    code, _, err = run_cli(capsys, "levels")
    assert code == 2
    assert "specify a family" in err


def test_verify_paper_section(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--only", "heights")
    assert code == 0
    assert "PASS" in out


def test_verify_paper_json_section(capsys):
    code, out, _ = run_cli(capsys, "--json", "verify-paper", "--only", "central-charge")
    assert code == 0
    data = json.loads(out)
    assert data["all_passed"] is True
    assert {c["criterion"] for c in data["checks"]} == {1, 2}
    assert no_floats(data)


def test_unsupported_family_is_an_error(capsys):
    code, _, err = run_cli(capsys, "levels", "--partition", "3,2,1")
    assert code == 1
    assert "hook and rectangular" in err
