"""Command-line surface: schemas, formats, exit codes."""

import json

import pytest

from regori.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, "--output", "json", *argv)
    return code, json.loads(out)


def test_stratum_exists_json(capsys):
    code, payload = run_json(capsys, "stratum-exists", "H(10^5)")
    assert code == 0
    assert payload["stratum"] == "H(10^5)"
    assert payload["status"] == "exists"
    assert payload["witness"] == "sd(11,5,3)"
    assert payload["generators"] == [[1, 0], [0, 1]]


def test_stratum_exists_not_exists(capsys):
    code, payload = run_json(capsys, "stratum-exists", "H(1,2)")
    assert code == 0
    assert payload["status"] == "not_exists"
    assert payload["reason"] == "non_uniform"


def test_stratum_whitespace_and_caret_one(capsys):
    code, payload = run_json(capsys, "stratum-exists", "H( 2^1 , 2 )")
    assert code == 0
    assert payload["stratum"] == "H(2^2)"


def test_t_of_g_exact_schema(capsys):
    code, payload = run_json(capsys, "t-of-g", "26")
    assert code == 0
    assert payload == {
        "g": 26,
        "status": "exact",
        "t": 55,
        "m": 10,
        "witness": "sd(11,5,3)",
    }


def test_t_of_g_interval_schema(capsys):
    code, payload = run_json(capsys, "t-of-g", "126")
    assert code == 0
    assert payload["status"] == "interval"
    assert payload["lower"] == 275
    assert payload["upper"] == 300
    assert payload["first_unknown_m"] == 5


def test_t_of_g_infinite_m(capsys):
    code, payload = run_json(capsys, "t-of-g", "36")
    assert code == 0
    assert payload["m"] == "inf"
    assert payload["t"] == 70


def test_progression_json(capsys):
    code, payload = run_json(capsys, "progression", "5")
    assert code == 0
    assert payload == {"modulus": 72, "residues": [11, 13, 59, 61]}


def test_progression_rejects_bad_m(capsys):
    code = main(["progression", "7"])
    assert code == 2


def test_one_cylinder(capsys):
    code, payload = run_json(capsys, "one-cylinder", "3")
    assert code == 0
    assert payload["stratum"] == "H(1^4)"
    assert payload["translations"] == 4
    assert payload["origami"].startswith("8;")


def test_regular_origami(capsys):
    code, payload = run_json(capsys, "regular-origami", "--group", "sd(11,5,3)")
    assert code == 0
    assert payload["stratum"] == "H(10^5)"
    assert payload["genus"] == 26
    assert payload["translations"] == 55


def test_psl_pair(capsys):
    code, payload = run_json(capsys, "psl-pair", "11", "12")
    assert code == 0
    assert payload["A"] == "[[1,2],[0,1]]@11"
    assert payload["closure_order"] == 1320


def test_semidirect_exists(capsys):
    code, payload = run_json(capsys, "semidirect-exists", "11", "5")
    assert code == 0
    assert payload["witness"] == {"m": 11, "n": 5, "d": 3}
    code, payload = run_json(capsys, "semidirect-exists", "9", "5")
    assert payload["status"] == "not_exists"


def test_enumerate(capsys):
    code, payload = run_json(capsys, "enumerate", "6")
    assert code == 0
    assert payload["count"] == 2
    strata = {w["stratum"] for w in payload["witnesses"]}
    assert strata == {"H()", "H(2^2)"}


def test_enumerate_csv(capsys):
    code, out = run(capsys, "--output", "csv", "enumerate", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "stratum,group_order,commutator_order,origami"
    assert len(lines) == 3


def test_table_summary(capsys):
    code, payload = run_json(capsys, "table", "summary-gm", "--m-max", "25")
    assert code == 0
    assert payload["all_match"] is True


def test_table_appendix_rows(capsys):
    code, payload = run_json(capsys, "table", "appendix-a", "--rows", "26,122")
    assert code == 0
    assert payload["all_match"] is True


def test_verify_appendix_b(capsys):
    code, payload = run_json(capsys, "verify-appendix-b", "21", "8")
    assert code == 0
    assert payload["mismatches"] == []


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["t-of-g"])  # missing argument
    assert exc.value.code == 2


def test_table_mismatch_exit_code(capsys, monkeypatch):
    from regori import tables

    wrong = dict(tables.SMALL_GENUS_ROWS)
    wrong[26] = (56, 10, "H(10^5)", "Z/11 : Z/5", True)
    monkeypatch.setattr(tables, "SMALL_GENUS_ROWS", wrong)
    code, payload = run_json(capsys, "table", "appendix-a", "--rows", "26")
    assert code == 1
    assert payload["all_match"] is False


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code = main(["--output", "json", "--out", str(target), "t-of-g", "26"])
    assert code == 0
    assert json.loads(target.read_text())["t"] == 55


def test_json_determinism(capsys):
    _, first = run(capsys, "--output", "json", "t-of-g", "122")
    _, second = run(capsys, "--output", "json", "t-of-g", "122")
    assert first == second


def test_text_output(capsys):
    code, out = run(capsys, "t-of-g", "26")
    assert code == 0
    assert "t: 55" in out


def test_flags_accepted_after_subcommand(capsys):
    code, out = run(capsys, "t-of-g", "26", "--output", "json")
    assert code == 0
    assert json.loads(out)["t"] == 55


def test_worker_env_override(monkeypatch):
    from regori.cli import build_parser

    monkeypatch.setenv("REGORI_WORKERS", "3")
    args = build_parser().parse_args(["t-of-g", "26"])
    assert args.workers == 3
    args = build_parser().parse_args(["--workers", "2", "t-of-g", "26"])
    assert args.workers == 2
