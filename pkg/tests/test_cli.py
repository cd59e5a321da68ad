"""End-to-end runs of the command line interface, in process."""

import json

import pytest

from latquot.cli import BUDGET, FAIL, PASS, USAGE, main
from latquot.construct import fixture_path
from latquot.verify import VerificationCase


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text(capsys):
    code, out, _ = run(capsys, "info", str(fixture_path("e7")))
    assert code == PASS
    assert "E7: rank 7" in out
    assert "max index      8 (exhaustive)" in out
    assert "(2, 2, 2)" in out
    assert "H_b            64 (certified)" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", str(fixture_path("a74")), "--json")
    assert code == PASS
    data = json.loads(out)
    assert data["label"] == "A7,4"
    assert data["min"] == "8"
    assert data["iota"] == 4
    assert data["quotient"] == [4]
    assert data["Qb"] == "9/8"
    assert data["Hb_certified"] is True


def test_info_missing_file(capsys):
    code, _, err = run(capsys, "info", "/no/such/file.lat")
    assert code == USAGE
    assert err


def test_info_tiny_budget(capsys):
    code, _, err = run(capsys, "info", str(fixture_path("e7")), "--budget", "3")
    assert code == BUDGET
    assert "budget" in err


def test_verify_codes_suite(capsys):
    code, out, _ = run(capsys, "verify", "codes")
    assert code == PASS
    assert "0 failed" in out


def test_verify_reports_failures(capsys, monkeypatch):
    bad = VerificationCase(
        id="x-broken",
        claim="a deliberately failing case",
        expected=1,
        computed=2,
        status="fail",
    )
    monkeypatch.setattr("latquot.cli.run_suite", lambda *a, **k: [bad])
    code, out, _ = run(capsys, "verify", "codes")
    assert code == FAIL
    assert "expected 1" in out
    assert "computed 2" in out


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "8", "2", "5")
    assert code == PASS
    assert "1 class" in out
    assert "5^2·6" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "9", "2", "5", "--json")
    assert code == PASS
    data = json.loads(out)
    assert data["classes"] == 3
    assert [row["distribution"] for row in data["codes"]] == [
        "5^2·8",
        "5·6·7",
        "6^3",
    ]


def test_watson_text(capsys):
    code, out, _ = run(
        capsys, "watson", str(fixture_path("zn4")), "--coset", "2:1,1,1,1"
    )
    assert code == PASS
    assert "holds" in out
    assert "lift minimum   1" in out
    assert "lift det       1/4" in out


def test_watson_coset_length_mismatch(capsys):
    code, _, err = run(
        capsys, "watson", str(fixture_path("zn4")), "--coset", "2:1,1"
    )
    assert code == USAGE
    assert "rank" in err


def test_watson_bad_coset_string(capsys):
    code, _, err = run(
        capsys, "watson", str(fixture_path("zn4")), "--coset", "2:x,y,z,w"
    )
    assert code == USAGE
    assert err


def test_search_range_check(capsys):
    code, _, err = run(capsys, "search", "3")
    assert code == USAGE
    assert "rank" in err


def test_search_is_deterministic(capsys):
    first = run(capsys, "search", "5", "--trials", "2", "--seed", "9")
    second = run(capsys, "search", "5", "--trials", "2", "--seed", "9")
    assert first == second
    assert first[0] == PASS
    assert "maximum Q_b" in first[1]


def test_unknown_subcommand_exits_via_argparse(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
