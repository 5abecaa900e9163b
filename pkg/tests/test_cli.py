"""End-to-end CLI behavior: output shapes, formats, exit codes."""

import json

from loopalg import Report
from loopalg.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


class TestCoproduct:
    def test_text_output(self, capsys):
        code, out, err = call(capsys, "--space", "cp", "--n", "2", "coproduct", "A[3,1]")
        assert code == 0
        assert out.strip() == (
            "A[1,0] x A[2,1] + A[1,1] x A[2,0] + A[2,0] x A[1,1] + A[2,1] x A[1,0]"
        )

    def test_routes_agree(self, capsys):
        argv = ["--space", "hp", "--n", "2", "coproduct", "B[3,1]"]
        code1, out1, _ = call(capsys, *argv, "--route", "closed")
        code2, out2, _ = call(capsys, *argv, "--route", "pipeline")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_json_schema(self, capsys):
        rec = call_json(capsys, "--space", "cp", "--n", "2", "coproduct", "A[3,1]")
        assert set(rec) == {"space", "n", "command", "result", "degree"}
        assert rec["space"] == "cp"
        assert rec["n"] == 2
        assert rec["command"] == "coproduct"
        assert rec["degree"] == 8
        assert rec["result"]["route"] == "closed"
        assert rec["result"]["input"] == "A[3,1]"
        assert len(rec["result"]["terms"]) == 4
        first = rec["result"]["terms"][0]
        assert first["coeff"] == "1"
        assert first["gen"] == [
            {"kind": "A", "k": 1, "i": 0},
            {"kind": "A", "k": 2, "i": 1},
        ]

    def test_level_one_gives_zero(self, capsys):
        code, out, _ = call(capsys, "--space", "cp", "--n", "2", "coproduct", "A[1,1]")
        assert code == 0
        assert out.strip() == "0"

    def test_latex_format(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "coproduct", "A[2,0]",
            "--format", "latex",
        )
        assert code == 0
        assert out.strip() == "A_{1}^{0} \\times A_{1}^{0}"

    def test_fractional_coefficients_survive_json(self, capsys):
        rec = call_json(
            capsys, "--space", "cp", "--n", "2", "coproduct", "1/3*A[2,0]"
        )
        assert rec["result"]["terms"][0]["coeff"] == "1/3"


class TestProduct:
    def test_two_arguments(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "product", "s[1,0]", "s[2,1]"
        )
        assert code == 0
        assert out.strip() == "s[3,1]"

    def test_single_tensor_argument(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "product",
            "s[1,0] x m[1,1] + m[1,0] x s[1,1]",
        )
        assert code == 0
        assert out.strip() == "2*m[2,1]"

    def test_vanishing_product(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "product", "m[1,0]", "m[1,1]"
        )
        assert code == 0
        assert out.strip() == "0"

    def test_json_input_echo(self, capsys):
        rec = call_json(
            capsys, "--space", "hp", "--n", "3", "product", "s[1,1]", "m[2,0]"
        )
        assert rec["result"]["input"] == ["s[1,1]", "m[2,0]"]
        assert rec["result"]["terms"] == [
            {"coeff": "1", "gen": [{"kind": "m", "k": 3, "i": 1}]}
        ]

    def test_three_arguments_rejected(self, capsys):
        code, _, err = call(
            capsys, "--space", "cp", "--n", "2", "product", "s[1,0]", "s[1,0]", "s[1,0]"
        )
        assert code == 2
        assert "product takes" in err

    def test_plain_argument_in_tensor_slot_rejected(self, capsys):
        code, _, err = call(capsys, "--space", "cp", "--n", "2", "product", "s[1,0]")
        assert code == 2
        assert "tensor" in err


class TestGysinAndCap:
    def test_pL_image(self, capsys):
        code, out, _ = call(
            capsys, "--space", "hp", "--n", "3", "gysin", "a1", "--k", "2",
            "--map", "pL",
        )
        assert code == 0
        assert out.strip() == "-[a x1 x2 x3]"

    def test_pV_image(self, capsys):
        code, out, _ = call(
            capsys, "--space", "hp", "--n", "3", "gysin", "ab1", "--k", "3",
            "--map", "pV:2",
        )
        assert code == 0
        assert out.strip() == "-[a b x1 x2 x3 x5]"

    def test_cap_value(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "cap", "a0", "--k", "2", "--m", "1"
        )
        assert code == 0
        assert out.strip() == "-[x1 x3]"

    def test_gysin_json_degree(self, capsys):
        rec = call_json(
            capsys, "--space", "cp", "--n", "2", "gysin", "a0", "--k", "2",
            "--map", "pL",
        )
        # [x1 x2 x3] sits in degree 5 over the level-2 manifold
        assert rec["degree"] == 5
        assert rec["result"]["terms"] == [
            {"coeff": "-1", "dual": {"x1": 1, "x2": 1, "x3": 1}}
        ]

    def test_bad_gen_token(self, capsys):
        code, _, err = call(
            capsys, "--space", "cp", "--n", "2", "gysin", "q1", "--k", "2",
            "--map", "pL",
        )
        assert code == 2
        assert "bad class token" in err

    def test_index_bound_in_token(self, capsys):
        code, _, err = call(
            capsys, "--space", "cp", "--n", "2", "gysin", "a2", "--k", "2",
            "--map", "pL",
        )
        assert code == 2
        assert "index out of range for n=2" in err

    def test_bad_map_spec(self, capsys):
        code, _, err = call(
            capsys, "--space", "cp", "--n", "2", "gysin", "a0", "--k", "2",
            "--map", "pW",
        )
        assert code == 2
        assert "expected pL or pV" in err

    def test_break_index_bounds(self, capsys):
        code, _, err = call(
            capsys, "--space", "cp", "--n", "2", "cap", "a0", "--k", "2", "--m", "2"
        )
        assert code == 2
        assert "break index" in err


class TestTable:
    def test_rows(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "table", "--max-degree", "8"
        )
        assert code == 0
        assert out.splitlines() == [
            "0 0", "1 1", "2 0", "3 1", "4 0", "5 1", "6 1", "7 1", "8 1",
        ]

    def test_json_rows(self, capsys):
        rec = call_json(capsys, "--space", "cp", "--n", "2", "table", "--max-degree", "3")
        assert rec["result"]["rows"] == [
            {"degree": 0, "dim": 0},
            {"degree": 1, "dim": 1},
            {"degree": 2, "dim": 0},
            {"degree": 3, "dim": 1},
        ]
        assert "degree" not in rec or rec["command"] == "table"

    def test_default_bound_follows_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "2")
        code, out_small, _ = call(capsys, "--space", "cp", "--n", "2", "table")
        assert code == 0
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "3")
        code, out_large, _ = call(capsys, "--space", "cp", "--n", "2", "table")
        assert code == 0
        assert len(out_large.splitlines()) > len(out_small.splitlines())


class TestVerify:
    def test_pass_exit_zero(self, capsys):
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "verify", "gysin", "--max-k", "3"
        )
        assert code == 0
        assert out.startswith("PASS (")

    def test_all_suites_pass_small(self, capsys):
        for suite in ("duality", "coassoc", "pipeline", "presentation", "gysin", "rings"):
            code, out, err = call(
                capsys, "--space", "cp", "--n", "1", "verify", suite, "--max-k", "2"
            )
            assert code == 0, (suite, err)
            assert out.startswith("PASS ("), suite

    def test_env_var_controls_depth(self, capsys, monkeypatch):
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "2")
        rec2 = call_json(capsys, "--space", "cp", "--n", "2", "verify", "coassoc")
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "4")
        rec4 = call_json(capsys, "--space", "cp", "--n", "2", "verify", "coassoc")
        assert rec4["result"]["checks"] > rec2["result"]["checks"]

    def test_max_k_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "2")
        rec = call_json(
            capsys, "--space", "cp", "--n", "2", "verify", "coassoc", "--max-k", "4"
        )
        big = call_json(capsys, "--space", "cp", "--n", "2", "verify", "coassoc")
        assert rec["result"]["checks"] > big["result"]["checks"]

    def test_bad_env_var_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("LOOPALG_MAX_LEVEL", "soon")
        code, _, err = call(capsys, "--space", "cp", "--n", "2", "verify", "coassoc")
        assert code == 2
        assert "LOOPALG_MAX_LEVEL" in err

    def test_failing_report_exits_one(self, capsys, monkeypatch):
        bad = Report("duality")
        bad.note(True, "fine")
        bad.note(False, "sample counterexample")
        monkeypatch.setattr("loopalg.cli.verify_duality", lambda params, k: bad)
        code, out, _ = call(capsys, "--space", "cp", "--n", "2", "verify", "duality")
        assert code == 1
        assert "FAIL (1 of 2 checks failed)" in out
        assert "sample counterexample" in out

    def test_failing_report_json(self, capsys, monkeypatch):
        bad = Report("duality")
        bad.note(False, "boom")
        monkeypatch.setattr("loopalg.cli.verify_duality", lambda params, k: bad)
        code, out, _ = call(
            capsys, "--space", "cp", "--n", "2", "verify", "duality",
            "--format", "json",
        )
        assert code == 1
        rec = json.loads(out)
        assert rec["result"]["passed"] is False
        assert rec["result"]["failures"] == ["boom"]


class TestUsage:
    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
        capsys.readouterr()

    def test_missing_required_options(self, capsys):
        assert run(["coproduct", "A[1,0]"]) == 2
        capsys.readouterr()

    def test_bad_space_token(self, capsys):
        assert run(["--space", "rp", "--n", "2", "table"]) == 2
        capsys.readouterr()

    def test_nonpositive_n(self, capsys):
        assert run(["--space", "cp", "--n", "0", "table"]) == 2
        capsys.readouterr()

    def test_expression_error_reported(self, capsys):
        code, _, err = call(capsys, "--space", "cp", "--n", "2", "coproduct", "A[1,5]")
        assert code == 2
        assert "index out of range for n=2" in err

    def test_cohomology_expr_rejected_by_coproduct(self, capsys):
        code, _, err = call(capsys, "--space", "cp", "--n", "2", "coproduct", "s[1,0]")
        assert code == 2
        assert "loop-homology" in err
