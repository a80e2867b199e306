"""CLI behavior: formats, exit codes, determinism."""

import json

import pytest

from coxsums import PowerSumResult, parse_type
from coxsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_e8_json(self, capsys):
        code, out, _ = run(capsys, "info", "E8", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["type"] == "E8"
        assert payload["r"] == 8
        assert payload["h"] == 30
        assert payload["gamma"] == 900
        assert payload["d"] == 6
        assert payload["nu"] == 0
        assert payload["V_plus"] == [20, 24]
        assert payload["V_minus"] == [6, 10]
        assert payload["exponents"] == [1, 7, 11, 13, 17, 19, 23, 29]

    def test_i2_9_redefined_half_integer(self, capsys):
        code, out, _ = run(
            capsys, "info", "I2(9)", "--profile", "redefined", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["d"] == "9/2"
        assert payload["beta"] == "9/2"

    def test_beta_override(self, capsys):
        code, out, _ = run(capsys, "info", "A2", "--beta", "7", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["beta"] == 7
        assert payload["V_minus"] == [1, 7]
        assert payload["V_plus"] == [2, 7]

    def test_beta_override_rejected_for_fixed_slot(self, capsys):
        code, _, err = run(capsys, "info", "E8", "--beta", "11")
        assert code == 2
        assert "error" in err

    def test_out_of_range_type(self, capsys):
        code, _, err = run(capsys, "info", "E9")
        assert code == 2 and err

    def test_unparseable_type(self, capsys):
        code, _, err = run(capsys, "info", "wat")
        assert code == 2 and err

    def test_normalizes_label(self, capsys):
        code, out, _ = run(capsys, "info", "B5", "--format", "json")
        assert code == 0
        assert json.loads(out)["type"] == "C5/B5"


class TestExponents:
    def test_pretty(self, capsys):
        code, out, _ = run(capsys, "exponents", "G2")
        assert code == 0
        assert "exponents: 1 5" in out
        assert "dual_partition: 2 1 1 1 1" in out


class TestPowersum:
    def test_all_methods_agree(self, capsys):
        code, out, _ = run(capsys, "powersum", "E8", "-n", "2", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert [row["method"] for row in rows] == ["direct", "todd", "closed"]
        assert all(row["value"] == 2360 for row in rows)

    def test_closed_method(self, capsys):
        code, out, _ = run(
            capsys, "powersum", "A2", "-n", "5", "--method", "closed", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)[0]["value"] == 33

    def test_zeroth_power(self, capsys):
        code, out, _ = run(capsys, "powersum", "F4", "-n", "0", "--format", "json")
        assert code == 0
        assert all(row["value"] == 4 for row in json.loads(out))

    def test_closed_degree_limit(self, capsys):
        code, _, err = run(capsys, "powersum", "A2", "-n", "6", "--method", "closed")
        assert code == 2 and err

    def test_all_skips_closed_beyond_degree_five(self, capsys):
        code, out, _ = run(capsys, "powersum", "A2", "-n", "7", "--format", "json")
        assert code == 0
        assert [row["method"] for row in json.loads(out)] == ["direct", "todd"]

    def test_bad_p(self, capsys):
        code, _, err = run(capsys, "powersum", "A2", "-n", "2", "--p", "0")
        assert code == 2 and err

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        import coxsums.powersums as powersums_module

        def fake(t, n, p=1, params=None):
            return PowerSumResult(parse_type("E8"), n, 999, "todd")

        monkeypatch.setattr(powersums_module, "powersum_todd", fake)
        code, _, err = run(capsys, "powersum", "E8", "-n", "2")
        assert code == 1
        assert "disagree" in err


class TestHeights:
    def test_a2(self, capsys):
        code, out, _ = run(capsys, "heights", "A2", "-n", "2", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert all(row["value"] == 6 for row in rows)
        assert all(row["note"] == "" for row in rows)

    def test_formal_label_for_noncrystallographic(self, capsys):
        code, out, _ = run(capsys, "heights", "H3", "-n", "1", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert all(row["value"] == 61 for row in rows)
        assert all(row["note"] == "formal height sum" for row in rows)

    def test_closed_degree_limit(self, capsys):
        code, _, err = run(capsys, "heights", "A2", "-n", "5", "--method", "closed")
        assert code == 2 and err


class TestTable:
    def test_csv_header(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--all", "--max-rank", "8", "--max-m", "8",
            "--n-max", "3", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "type,r,h,gamma,d,nu,alpha,beta,A,B,S0,S1,S2,S3"
        assert all("," in line for line in lines[1:])

    def test_json_a1(self, capsys):
        code, out, _ = run(
            capsys, "table", "--types", "A1", "--n-max", "1", "--format", "json"
        )
        assert code == 0
        row = json.loads(out)[0]
        assert row["type"] == "A1"
        assert row["r"] == 1
        assert row["h"] == 2
        assert row["gamma"] == 4
        assert row["S1"] == 1

    def test_latex_three_rows(self, capsys):
        code, out, _ = run(
            capsys, "table", "--types", "E6,E7,E8", "--format", "latex"
        )
        assert code == 0
        assert out.startswith("\\begin{tabular}")
        assert out.count("\\\\") == 4  # header plus three data rows
        assert "20,24 & 6,10" in out

    def test_requires_selection(self, capsys):
        code, _, err = run(capsys, "table")
        assert code == 2 and err


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "expsum", "--max-rank", "3", "--max-m", "5"
        )
        assert code == 0
        assert "expsum A1 [standard]: PASS" in out
        assert "all checks passed" in out

    def test_full_small_sweep(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-rank", "3", "--max-m", "4", "--n-max", "4"
        )
        assert code == 0
        for suite in ("expsum", "multiset", "gamma", "todd-symm", "methods"):
            assert f"{suite}: PASS" in out

    def test_jobs_do_not_change_output(self, capsys):
        _, solo, _ = run(
            capsys, "verify", "--max-rank", "3", "--max-m", "4", "--n-max", "3"
        )
        _, pooled, _ = run(
            capsys, "verify", "--max-rank", "3", "--max-m", "4", "--n-max", "3",
            "--jobs", "4",
        )
        assert solo == pooled

    def test_byte_identical_reruns(self, capsys):
        args = ("verify", "--suite", "todd-symm", "--seed", "5")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_seed_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("COX_SEED", "7")
        _, out, _ = run(
            capsys, "verify", "--suite", "kostant", "--max-rank", "4", "--max-m", "3"
        )
        assert "seed=7" in out

    def test_flag_beats_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("COX_SEED", "7")
        _, out, _ = run(
            capsys, "verify", "--suite", "kostant", "--max-rank", "4", "--max-m", "3",
            "--seed", "9",
        )
        assert "seed=9" in out

    def test_bad_suite_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "nope")
        assert code == 2

    def test_failure_exits_one(self, capsys, monkeypatch):
        import coxsums.verify as verify_module
        from coxsums.verify import CheckReport

        def broken(t, profile=None, params=None):
            return CheckReport("gamma", t.name, False, "injected fault")

        monkeypatch.setattr(verify_module, "check_gamma_formula", broken)
        code, out, _ = run(
            capsys, "verify", "--suite", "gamma", "--max-rank", "2", "--max-m", "3"
        )
        assert code == 1
        assert "FAIL" in out and "injected fault" in out


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_negative_n(self, capsys):
        code, _, err = run(capsys, "powersum", "A2", "-n", "-1")
        assert code == 2 and err
