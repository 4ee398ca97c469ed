"""CLI contract: output records, table formats, exit codes, determinism."""

import json

import pytest

from davenport import __version__
from davenport.cli import main
from davenport.errors import ComputationError
from davenport.service import handlers


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTableCommand:
    def test_tsv_output(self, capsys):
        code, out, err = run_cli(capsys, "table", "theorem1", "--jmax", "10", "--format", "tsv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].split("\t") == ["j", "lower", "lower_display", "upper", "upper_display"]
        assert len(lines) == 11
        row7 = dict(zip(lines[0].split("\t"), lines[7].split("\t")))
        assert row7["j"] == "7"
        assert row7["lower_display"] == "2.333"
        assert row7["upper_display"] == "3.143"

    def test_json_record_shape(self, capsys):
        code, out, _ = run_cli(capsys, "table", "theorem1", "--jmax", "3")
        assert code == 0
        record = json.loads(out)
        assert set(record) == {"command", "parameters", "result", "provenance", "version"}
        assert record["command"] == "table theorem1"
        assert record["version"] == __version__
        assert record["parameters"]["jmax"] == 3
        assert len(record["result"]["rows"]) == 3

    def test_json_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "table", "theorem1", "--jmax", "4")
        record = json.loads(out)
        assert json.loads(json.dumps(record)) == record

    def test_byte_identical_repeat_runs(self, capsys):
        _, first, _ = run_cli(capsys, "table", "theorem1", "--jmax", "6")
        _, second, _ = run_cli(capsys, "table", "theorem1", "--jmax", "6")
        assert first == second

    def test_schedule_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "theorem1", "--jmax", "5", "--schedule", "mixed-f2f3"
        )
        assert code == 0
        record = json.loads(out)
        assert record["result"]["schedule"] == "mixed-f2f3"
        assert record["result"]["rows"][4]["upper_display"] == "2.512"


class TestScalarCommands:
    def test_bounds_eval(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "eval", "--kind", "hamming", "--delta", "0.0")
        assert code == 0
        record = json.loads(out)
        assert record["result"]["value"] == 1.0
        assert record["provenance"] == "kind=hamming"

    def test_bounds_eval_alias(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "eval", "--kind", "eb", "--delta", "0.5")
        assert code == 0
        assert json.loads(out)["result"]["kind"] == "elias-bassalygo"

    def test_solve(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--p", "1", "--kind", "mrrw1")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["total"] == pytest.approx(1.39562803, abs=1e-6)
        assert result["total_display"] == "1.396"
        assert abs(result["residual"]) <= 1e-9

    def test_heuristic_tsv(self, capsys):
        code, out, _ = run_cli(capsys, "heuristic", "--jmax", "5", "--format", "tsv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].split("\t") == ["j", "increment", "cumulative", "display"]
        assert lines[2].split("\t")[3] == "1.294"

    def test_asymptotic(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotic", "--jmax", "100")
        assert code == 0
        decades = json.loads(out)["result"]["decades"]
        assert [d["j"] for d in decades] == [10, 100]

    def test_corollary_warns_on_stderr(self, capsys):
        code, out, err = run_cli(capsys, "corollary", "--rank", "1000", "--n", "5")
        assert code == 0
        assert "asymptotic" in err
        assert json.loads(out)["result"]["value"] == pytest.approx(2477.69958, abs=1.0)


class TestExactCommands:
    def test_davenport_record(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "davenport", "--rank", "3", "--j", "1")
        assert code == 0
        result = json.loads(out)["result"]
        assert set(result) == {"r", "j", "value", "witness"}
        assert result == {"r": 3, "j": 1, "value": 4, "witness": [1, 2, 4]}

    def test_sconst(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "sconst", "--rank", "3", "--d", "2")
        assert code == 0
        assert json.loads(out)["result"]["value"] == 8

    def test_decompose(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "decompose", "--rank", "2", "--elements", "1,1,2,2")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["max_disjoint"] == 2

    def test_decompose_bad_elements(self, capsys):
        code, _, err = run_cli(capsys, "exact", "decompose", "--rank", "2", "--elements", "1,x")
        assert code == 2
        assert "comma-separated" in err


class TestCountingCommands:
    def test_ratio(self, capsys):
        code, out, _ = run_cli(
            capsys, "counting", "ratio", "--n", "12", "--rank", "8", "--j", "2", "--mode", "exact"
        )
        assert code == 0
        result = json.loads(out)["result"]
        assert result["exact_ratio"] == {"numerator": "177147", "denominator": "26611"}

    def test_lower(self, capsys):
        code, out, _ = run_cli(capsys, "counting", "lower", "--rank", "3", "--j", "2")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["value"] == 5
        assert result["coefficient"] == pytest.approx(1.2618595, abs=1e-6)


class TestVerifyCommand:
    def test_small_run_has_no_mismatches(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "pcm", "--trials", "10", "--seed", "7")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["mismatches"] == 0
        assert result["failures"] == []

    def test_thread_count_does_not_change_results(self, capsys):
        _, one, _ = run_cli(
            capsys, "verify", "pcm", "--trials", "12", "--seed", "3", "--threads", "1"
        )
        _, four, _ = run_cli(
            capsys, "verify", "pcm", "--trials", "12", "--seed", "3", "--threads", "4"
        )
        result_one = json.loads(one)["result"]
        result_four = json.loads(four)["result"]
        assert result_one.pop("threads") == 1
        assert result_four.pop("threads") == 4
        assert result_one == result_four

    def test_env_var_sets_threads(self, capsys, monkeypatch):
        monkeypatch.setenv(handlers.THREADS_ENV_VAR, "2")
        _, out, _ = run_cli(capsys, "verify", "pcm", "--trials", "4", "--seed", "1")
        assert json.loads(out)["result"]["threads"] == 2

    def test_bad_env_var_is_parameter_error(self, capsys, monkeypatch):
        monkeypatch.setenv(handlers.THREADS_ENV_VAR, "bogus")
        code, _, err = run_cli(capsys, "verify", "pcm", "--trials", "2", "--seed", "1")
        assert code == 2
        assert err


class TestExitCodes:
    def test_parameter_error_is_two(self, capsys):
        code, _, err = run_cli(capsys, "exact", "davenport", "--rank", "9", "--j", "1")
        assert code == 2
        assert "rank" in err

    def test_unknown_kind_is_two(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "eval", "--kind", "nosuch", "--delta", "0.1")
        assert code == 2
        assert "nosuch" in err

    def test_computation_error_is_three(self, capsys, monkeypatch):
        def explode(req):
            raise ComputationError("search gave up")

        monkeypatch.setattr(handlers, "bounds_eval", explode)
        code, _, err = run_cli(capsys, "bounds", "eval", "--kind", "hamming", "--delta", "0.1")
        assert code == 3
        assert "search gave up" in err

    def test_validation_error_is_two(self, capsys):
        code, _, err = run_cli(capsys, "exact", "davenport", "--rank", "0", "--j", "1")
        assert code == 2
        assert err

    def test_missing_argument_exits_two(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["table", "theorem1"])
        assert excinfo.value.code == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert __version__ in capsys.readouterr().out
