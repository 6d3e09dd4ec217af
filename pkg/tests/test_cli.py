"""Tests for the command-line interface."""

import json
import os

import pytest
from typer.testing import CliRunner

from kneserlab.cli import EXIT_BUDGET, EXIT_USAGE, _start, app, main
from kneserlab.coloring import Coloring, c1_coloring, load_coloring, save_coloring
from kneserlab.config import CONFIG_FILE_ENV, get_settings


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(app, ["--log-level", "ERROR", *args])


@pytest.mark.smoke
class TestCli:
    """Test suite for the kneserlab command."""

    def test_help(self, runner):
        """Test that the top-level help lists the subcommands."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for name in ("gen", "construct", "verify", "descend", "basecase", "tucker", "sizes"):
            assert name in result.stdout

    def test_gen_kneser(self, runner):
        """Test DIMACS output on stdout."""
        result = invoke(runner, "gen", "kneser", "--n", "4", "--k", "2")
        assert result.exit_code == 0
        assert "p cnf 6 9" in result.stdout

    def test_gen_tucker_to_file(self, runner, temp_dir):
        """Test DIMACS output written to a file."""
        out = temp_dir / "tucker.cnf"
        result = invoke(runner, "gen", "tucker", "--n", "4", "--k", "2", "--merge-antipodal", "--out", str(out))
        assert result.exit_code == 0
        assert "p cnf 18 " in out.read_text()

    def test_construct_and_verify(self, runner, temp_dir):
        """Test that a constructed coloring verifies."""
        out = temp_dir / "c1.json"
        assert invoke(runner, "construct", "c1", "--n", "6", "--k", "2", "--out", str(out)).exit_code == 0
        assert load_coloring(out) == c1_coloring(6, 2)
        result = invoke(runner, "verify", "coloring", "--in", str(out), "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["ok"] is True
        assert payload["alpha"] == 3

    def test_verify_reports_violation(self, runner, temp_dir):
        """Test exit code 1 for an improper coloring."""
        path = save_coloring(Coloring(n=4, k=2, m=1, colors=(1,) * 6), temp_dir / "bad.json")
        result = invoke(runner, "verify", "coloring", "--in", str(path))
        assert result.exit_code == 1

    def test_construct_greedy(self, runner, temp_dir):
        """Test a seeded greedy coloring from the command line."""
        out = temp_dir / "greedy.json"
        result = invoke(runner, "construct", "greedy", "--n", "7", "--k", "2", "--seed", "4", "--out", str(out))
        assert result.exit_code == 0
        assert load_coloring(out).m == 5

    def test_descend_full(self, runner, temp_dir):
        """Test a full batch reduction trace."""
        path = save_coloring(c1_coloring(8, 2), temp_dir / "c1.json")
        result = invoke(runner, "descend", "--in", str(path), "--mode", "batch", "--full")
        assert result.exit_code == 0
        trace = json.loads(result.stdout)
        assert [size[0] for size in trace["sizes"]] == [8, 6, 4]

    def test_descend_single_step(self, runner, temp_dir):
        """Test one single step."""
        path = save_coloring(c1_coloring(6, 2), temp_dir / "c1.json")
        result = invoke(runner, "descend", "--in", str(path))
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["step"]["discarded_nodes"] == [4]
        assert payload["coloring"]["n"] == 5

    def test_schedule(self, runner):
        """Test the round schedule command."""
        result = invoke(runner, "schedule", "--n", "30", "--k", "2")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["sizes"] == [30, 22]

    def test_basecase(self, runner):
        """Test exit code 0 when every base case is uncolorable."""
        result = invoke(runner, "basecase", "--k", "2", "--n-max", "6", "--format", "json")
        assert result.exit_code == 0

    def test_basecase_budget(self, runner):
        """Test exit code 2 when the budget runs out."""
        result = invoke(runner, "basecase", "--k", "2", "--n-max", "6", "--max-nodes", "1")
        assert result.exit_code == 2

    def test_tucker_exhaust(self, runner):
        """Test the exhaustive truncated Tucker sweep."""
        result = invoke(runner, "tucker", "exhaust", "--n", "4", "--k", "2")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["maps_checked"] == 512

    def test_tucker_witness_from_coloring(self, runner, temp_dir):
        """Test that a proper coloring yields no witness."""
        path = save_coloring(c1_coloring(6, 2), temp_dir / "c1.json")
        result = invoke(runner, "tucker", "witness", "--from-coloring", str(path))
        assert result.exit_code == 0
        assert json.loads(result.stdout)["witness"] is None

    def test_tucker_witness_random(self, runner):
        """Test that a random map has a witness."""
        result = invoke(runner, "tucker", "witness", "--n", "5", "--k", "2", "--seed", "3")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["witness"] is not None

    def test_tucker_lift_check(self, runner):
        """Test the lift soundness sweep."""
        result = invoke(runner, "tucker", "lift-check", "--n", "4", "--k", "2", "--seeds", "3")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["violations"] == 0

    def test_sizes_csv(self, runner):
        """Test CSV size output."""
        result = invoke(runner, "sizes", "--k", "2", "--n-list", "6,7")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0].startswith("n,k,m,kneser")


@pytest.mark.unit
class TestRunConfig:
    """Test suite for resolving a run before dispatch."""

    def test_unset_options_come_from_settings(self):
        """Test that omitted options take the current settings."""
        settings = get_settings()
        run = _start("basecase", k=2, max_nodes=None)
        assert run.max_nodes == settings.search.max_nodes
        assert run.symmetry_breaking is settings.search.symmetry_breaking
        assert run.counting == settings.translate.counting
        assert run.budget.max_seconds == settings.search.max_seconds

    def test_explicit_options_win(self):
        """Test that given options override settings."""
        run = _start("basecase", k=2, max_nodes=5, symmetry_breaking=False)
        assert run.max_nodes == 5
        assert run.symmetry_breaking is False

    def test_config_file_drives_the_run(self, runner, temp_dir):
        """Test that --config values reach the command without touching the environment."""
        path = temp_dir / "settings.yaml"
        path.write_text("greedy:\n  sweeps: 0\nsearch:\n  max_nodes: 1\n")
        out = temp_dir / "greedy.json"
        result = runner.invoke(
            app, ["--config", str(path), "construct", "greedy", "--n", "7", "--k", "2", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert load_coloring(out).colors == c1_coloring(7, 2).colors
        assert CONFIG_FILE_ENV not in os.environ
        result = runner.invoke(app, ["--config", str(path), "basecase", "--k", "2", "--n-max", "5"])
        assert result.exit_code == EXIT_BUDGET


@pytest.mark.smoke
class TestMainExitCodes:
    """Test suite for the exit codes of the entry point."""

    def test_success(self, capsys):
        """Test exit code 0."""
        assert main(["--log-level", "ERROR", "schedule", "--n", "10", "--k", "2"]) == 0

    def test_usage_error(self, capsys):
        """Test that unknown commands map to exit code 64."""
        assert main(["--log-level", "ERROR", "frobnicate"]) == EXIT_USAGE

    def test_invalid_parameters(self, capsys):
        """Test that violated preconditions map to exit code 64."""
        assert main(["--log-level", "ERROR", "gen", "kneser", "--n", "3", "--k", "2"]) == EXIT_USAGE

    def test_violation(self, capsys, temp_dir):
        """Test that an improper coloring maps to exit code 1."""
        path = save_coloring(Coloring(n=4, k=2, m=1, colors=(1,) * 6), temp_dir / "bad.json")
        assert main(["--log-level", "ERROR", "verify", "coloring", "--in", str(path)]) == 1
