"""Exit codes, parsing, serialization, and golden values of the CLI."""

import csv
import io
import json

import pytest

from acue_lab import cli
from acue_lab.numeric import ComplexValue, as_value, float_abs
from acue_lab.verify import SuiteResult

from conftest import BITS


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# Complex parsing


def test_parse_complex_forms():
    cases = [
        ("2", 2 + 0j),
        ("-1.5", -1.5 + 0j),
        ("2+3i", 2 + 3j),
        ("2-3i", 2 - 3j),
        ("2+i", 2 + 1j),
        ("i", 1j),
        ("-i", -1j),
        ("3j", 3j),
        ("1e-3+2.5e2i", 1e-3 + 2.5e2j),
        ("0.5,0.2", 0.5 + 0.2j),
        (" -0.25 , -4 ", -0.25 - 4j),
    ]
    for text, want in cases:
        got = cli.parse_complex(text, BITS)
        assert got.to_complex() == want, text


def test_parse_complex_full_precision():
    digits = "0.12345678901234567890123456789012345678901234567890123456789012345678901234567890"
    got = cli.parse_complex(digits, BITS)
    want = ComplexValue.make(digits, 0, BITS)
    assert got == want
    # a double-precision intermediate would collapse these
    assert got != ComplexValue.make(float(digits), 0, BITS)


def test_parse_complex_rejects_garbage():
    for bad in ["", "abc", "1+2", "1,2,3", "2++3i", "1iq"]:
        with pytest.raises(cli.UsageError):
            cli.parse_complex(bad, BITS)


def test_parse_complex_list_forms():
    vals = cli.parse_complex_list("2,3,5,7", BITS)
    assert [v.to_complex() for v in vals] == [2, 3, 5, 7]
    vals = cli.parse_complex_list("0.5,0.2;-0.3,0.1", BITS)
    assert [v.to_complex() for v in vals] == [0.5 + 0.2j, -0.3 + 0.1j]
    vals = cli.parse_complex_list("1+2i; 0.5,-1 ;3", BITS)
    assert [v.to_complex() for v in vals] == [1 + 2j, 0.5 - 1j, 3]
    single = cli.parse_complex_list("0.5,0.2;", BITS)
    assert [v.to_complex() for v in single] == [0.5 + 0.2j]
    with pytest.raises(cli.UsageError):
        cli.parse_complex_list("  ", BITS)


# ---------------------------------------------------------------------------
# moments


def test_moments_golden_json(capsys):
    code, out, _ = run_cli(
        capsys,
        ["moments", "--ensemble", "both", "-n", "1", "-k", "2", "-l", "2",
         "--shifts", "2,3,5,7"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "moments"
    assert payload["precision_bits"] == 256
    rows = {row["formula_id"]: row for row in payload["results"]}
    assert set(rows) == {"acue_moment", "cue_moment", "difference"}

    acue = ComplexValue.from_json_dict(rows["acue_moment"]["value"])
    cue = ComplexValue.from_json_dict(rows["cue_moment"]["value"])
    diff = ComplexValue.from_json_dict(rows["difference"]["value"])
    assert float_abs(acue - as_value(312, BITS)) < 1e-70
    assert float_abs(cue - as_value(101, BITS)) < 1e-70
    assert float_abs(diff - as_value(211, BITS)) < 1e-70
    assert rows["acue_moment"]["oracle"] is not None
    assert rows["acue_moment"]["rel_err"] < 1e-70

    # serialized complexes round-trip bitwise
    redone = ComplexValue.from_json_dict(rows["acue_moment"]["value"]).to_json_dict()
    assert redone == rows["acue_moment"]["value"]


def test_moments_csv_columns(capsys):
    code, out, _ = run_cli(
        capsys,
        ["moments", "-n", "2", "-k", "1", "-l", "1", "--shifts", "0.5+0.25i,0.125",
         "--format", "csv"],
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == cli.CSV_COLUMNS
    ids = [row["formula_id"] for row in rows]
    assert ids == ["acue_moment", "cue_moment", "difference"]
    # k = l = 1 <= n = 2: the difference row is exactly zero
    assert rows[2]["value_re"] == "0" and rows[2]["value_im"] == "0"
    assert rows[0]["oracle_re"] != ""


def test_moments_shift_count_mismatch_is_math_error(capsys):
    code, _, err = run_cli(
        capsys, ["moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "1+2i"]
    )
    assert code == 2
    assert "shift" in err.lower()


def test_moments_skips_oracle_beyond_cap(capsys):
    code, out, _ = run_cli(
        capsys,
        ["moments", "-n", "7", "-k", "1", "-l", "1", "--shifts", "0.4,0.7",
         "--ensemble", "acue"],
    )
    assert code == 0
    payload = json.loads(out)
    row = payload["results"][0]
    assert row["oracle"] is None and row["rel_err"] is None


# ---------------------------------------------------------------------------
# ratios


def test_ratios_oracle_and_composition(capsys):
    code, out, _ = run_cli(
        capsys,
        ["ratios", "-n", "2", "-j", "2", "--v", "0.3+0.2i;-0.4,0.1",
         "--u", "1.3-0.2i;0.2,-1.1"],
    )
    assert code == 0
    payload = json.loads(out)
    rows = {row["formula_id"]: row for row in payload["results"]}
    assert set(rows) == {"acue_ratio", "bos_compose"}
    assert rows["acue_ratio"]["rel_err"] < 1e-70
    assert rows["bos_compose"]["rel_err"] < 1e-70
    a = ComplexValue.from_json_dict(rows["acue_ratio"]["value"])
    b = ComplexValue.from_json_dict(rows["bos_compose"]["value"])
    assert a == b


def test_ratios_j_mismatch_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys,
        ["ratios", "-n", "1", "-j", "3", "--v", "0.3", "--u", "1.6"],
    )
    assert code == 1
    assert "usage error" in err


def test_ratios_pole_is_math_error(capsys):
    code, _, err = run_cli(
        capsys, ["ratios", "-n", "1", "--v", "0.5", "--u", "1+0i"]
    )
    assert code == 2
    assert "error:" in err


# ---------------------------------------------------------------------------
# compare


def test_compare_requires_tao_scan(capsys):
    code, _, err = run_cli(capsys, ["compare", "-n", "2"])
    assert code == 1
    assert "tao-scan" in err


def test_compare_zero_set_is_square(capsys):
    code, out, _ = run_cli(
        capsys,
        ["compare", "--tao-scan", "-n", "2", "--kmax", "3", "--lmax", "3",
         "--trials", "2"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["boundary_matches_square"] is True
    for row in payload["results"]:
        in_square = row["k"] <= 2 and row["l"] <= 2
        assert row["agree"] == in_square
        if in_square:
            assert row["max_rel_diff"] == 0.0


def test_compare_boundary_mismatch_exits_3(capsys, monkeypatch):
    def fake_scan(n, kmax, lmax, trials, seed, precision_bits=256):
        return [
            {"k": 1, "l": 1, "max_rel_diff": 0.5, "agree": False,
             "in_agreement_regime": True}
        ]

    monkeypatch.setattr(cli, "agreement_scan", fake_scan)
    code, out, _ = run_cli(
        capsys, ["compare", "--tao-scan", "-n", "1", "--kmax", "1", "--lmax", "1"]
    )
    assert code == 3
    assert json.loads(out)["boundary_matches_square"] is False


# ---------------------------------------------------------------------------
# verify


def test_verify_single_suite(capsys):
    code, out, err = run_cli(
        capsys, ["verify", "--suite", "normalization", "-n", "3"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert payload["suites"][0]["suite"] == "normalization"
    assert payload["suites"][0]["max_rel_err"] < 2.0**-200
    assert "normalization" in err


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = run_cli(capsys, ["verify", "--suite", "bogus"])
    assert code == 1
    assert "bogus" in err


def test_verify_failure_exits_3(capsys, monkeypatch):
    failed = SuiteResult(
        name="normalization", passed=False, max_err=1.0, checks=1,
        elapsed_seconds=0.0, failures=["synthetic"],
    )
    monkeypatch.setattr(cli, "run_suite", lambda name, params: failed)
    code, out, _ = run_cli(capsys, ["verify", "--suite", "normalization"])
    assert code == 3
    assert json.loads(out)["all_passed"] is False


# ---------------------------------------------------------------------------
# zeta-limit


def test_zeta_limit_right_halfplane(capsys):
    code, out, _ = run_cli(
        capsys,
        ["zeta-limit", "--mus", "0.8+0.3i;1.1-0.2i", "--nus", "0.5,0.1;0.9,0.4",
         "--kernel", "cue", "--avg"],
    )
    assert code == 0
    payload = json.loads(out)
    rows = {row["formula_id"]: row for row in payload["results"]}
    det_val = ComplexValue.from_json_dict(rows["ratio_limit_det"]["value"])
    avg_val = ComplexValue.from_json_dict(rows["averaged_acue_limit"]["value"])
    one = ComplexValue.one(BITS)
    # all scaled shifts in the right half-plane: CUE limit and the
    # rotation-averaged limit both collapse to 1
    assert float_abs(det_val - one) < 1e-70
    assert float_abs(avg_val - one) < 1e-70


def test_zeta_limit_contour_pole_is_math_error(capsys):
    code, _, err = run_cli(
        capsys,
        ["zeta-limit", "--mus", "0+0.4i", "--nus", "0.5", "--avg"],
    )
    assert code == 2
    assert "error:" in err


# ---------------------------------------------------------------------------
# shared plumbing


def test_env_var_sets_precision(capsys, monkeypatch):
    monkeypatch.setenv("ACUE_LAB_PRECISION_BITS", "128")
    code, out, _ = run_cli(
        capsys, ["moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "2,3"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["precision_bits"] == 128
    assert payload["results"][0]["value"]["precision_bits"] == 128


def test_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("ACUE_LAB_PRECISION_BITS", "128")
    code, out, _ = run_cli(
        capsys,
        ["moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "2,3",
         "--precision-bits", "192"],
    )
    assert code == 0
    assert json.loads(out)["precision_bits"] == 192


def test_bad_env_var_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("ACUE_LAB_PRECISION_BITS", "lots")
    code, _, err = run_cli(
        capsys, ["moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "2,3"]
    )
    assert code == 1
    assert "ACUE_LAB_PRECISION_BITS" in err


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, ["moments", "--frobnicate"])
    assert code == 1


def test_output_is_deterministic(capsys):
    argv = ["compare", "--tao-scan", "-n", "1", "--kmax", "2", "--lmax", "2",
            "--trials", "2", "--seed", "7"]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
