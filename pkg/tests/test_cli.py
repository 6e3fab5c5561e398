"""
Tests for the command-line interface.
"""

import json
import os
import subprocess
import sys
from pathlib import Path
from unittest.mock import patch

from ballq_verify.main import cli

REPO_ROOT = Path(__file__).resolve().parents[1]


def run_cli(args, cwd, **env):
    """Run the CLI in a fresh interpreter, as the console script would."""
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("BALLQ_")}
    full_env["PYTHONPATH"] = str(REPO_ROOT)
    full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "ballq_verify.main", *args],
        cwd=cwd,
        env=full_env,
        capture_output=True,
        text=True,
        timeout=300,
    )


class TestGlobalOptions:
    """Test cases for the top-level group."""

    def test_help(self, runner_with_no_logging):
        """Every command is listed."""
        result = runner_with_no_logging.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ["report", "explain", "registry", "hj", "reider", "config"]:
            assert command in result.output
        assert "--quiet" in result.output

    def test_version(self, runner_with_no_logging):
        """--version prints the package version."""
        result = runner_with_no_logging.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "ballq-verify" in result.output

    def test_missing_config_file(self, runner_with_no_logging, temp_dir):
        """An explicit --config that does not exist is an error."""
        missing = temp_dir / "absent.yaml"
        result = runner_with_no_logging.invoke(
            cli, ["--config", str(missing), "registry", "--case", "d"]
        )
        assert result.exit_code == 1
        assert "Configuration file not found" in result.output


class TestReportCommand:
    """Test cases for the report command."""

    def test_full_report(self, runner_with_no_logging):
        """All checks replay; FLAGGED alone does not fail the run."""
        result = runner_with_no_logging.invoke(cli, ["-q", "report", "--sequential"])
        assert result.exit_code == 0
        assert "56 checks: 54 MATCH, 2 FLAGGED, 0 MISMATCH" in result.output

    def test_fail_on_flagged(self, runner_with_no_logging):
        """--fail-on-flagged turns FLAGGED into exit code 1."""
        result = runner_with_no_logging.invoke(
            cli, ["-q", "report", "--scope", "singularities", "--fail-on-flagged"]
        )
        assert result.exit_code == 1
        assert "FLAGGED" in result.output

    def test_fail_on_flagged_from_env(self, runner_with_no_logging):
        """The verifier setting can come from the environment."""
        result = runner_with_no_logging.invoke(
            cli,
            ["-q", "report", "--scope", "coverings"],
            env={"BALLQ_VERIFIER_FAIL_ON_FLAGGED": "true"},
        )
        assert result.exit_code == 1

    def test_scope_without_disputes(self, runner_with_no_logging):
        """A scope with no disputed step passes even with --fail-on-flagged."""
        result = runner_with_no_logging.invoke(
            cli, ["-q", "report", "--scope", "appendix2", "--fail-on-flagged"]
        )
        assert result.exit_code == 0
        assert "18 checks: 18 MATCH" in result.output

    def test_json_output(self, runner_with_no_logging):
        """JSON output is an array of results."""
        result = runner_with_no_logging.invoke(
            cli, ["report", "--scope", "registry", "--json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data) == 8
        assert {item["status"] for item in data} == {"MATCH"}

    def test_invalid_scope(self, runner_with_no_logging):
        """Unknown scopes are usage errors."""
        result = runner_with_no_logging.invoke(cli, ["report", "--scope", "nowhere"])
        assert result.exit_code == 2

    def test_quiet_from_environment(self, runner_with_no_logging):
        """BALLQ_QUIET suppresses progress output."""
        with patch.dict(os.environ, {"BALLQ_QUIET": "1"}):
            result = runner_with_no_logging.invoke(
                cli, ["report", "--scope", "reider", "--sequential"]
            )
        assert result.exit_code == 0
        assert "Replaying" not in result.output


class TestExplainCommand:
    """Test cases for the explain command."""

    def test_explain(self, runner_with_no_logging):
        """The derivation is printed."""
        result = runner_with_no_logging.invoke(cli, ["explain", "prop1.enumeration"])
        assert result.exit_code == 0
        assert "Derivation:" in result.output
        assert "Status: MATCH" in result.output

    def test_explain_alias(self, runner_with_no_logging):
        """Aliases are accepted."""
        result = runner_with_no_logging.invoke(cli, ["explain", "appII.57"])
        assert result.exit_code == 0
        assert "sec5_5.budget_57" in result.output

    def test_explain_unknown(self, runner_with_no_logging):
        """Unknown ids exit 2 and list the valid ids."""
        result = runner_with_no_logging.invoke(cli, ["explain", "nope"])
        assert result.exit_code == 2
        assert "Unknown check id: nope" in result.output
        assert "lemma2.h0" in result.output


class TestRegistryCommand:
    """Test cases for the registry command."""

    def test_min_type(self, runner_with_no_logging):
        """Four minimal-type lattices."""
        result = runner_with_no_logging.invoke(cli, ["registry", "--case", "min"])
        assert result.exit_code == 0
        assert "(a=23,p=2,{23})" in result.output
        assert "4 lattices" in result.output

    def test_case_d_covering(self, runner_with_no_logging):
        """The case (d) lattice shows its covering context."""
        result = runner_with_no_logging.invoke(cli, ["-q", "registry", "--case", "d"])
        assert result.exit_code == 0
        assert "deg 21" in result.output
        assert "lattices" not in result.output

    def test_json(self, runner_with_no_logging):
        """JSON export of all 50 lattices."""
        result = runner_with_no_logging.invoke(cli, ["registry", "--json"])
        assert result.exit_code == 0
        assert len(json.loads(result.output)) == 50

    def test_corrupted_data_file(self, runner_with_no_logging, temp_dir):
        """A corrupted registry reports the row and exits 1."""
        data_file = temp_dir / "fpp.csv"
        data_file.write_text(
            "raw_name,family,prime_or_place,torsion_set,subgroup_tag,case\n"
            '"(a=1,p=5,∅,D_3)",a=1,p=5,∅,D_3,q\n'
        )
        result = runner_with_no_logging.invoke(
            cli, ["registry"], env={"BALLQ_REGISTRY_DATA_FILE": str(data_file)}
        )
        assert result.exit_code == 1
        assert "row 2" in result.output


class TestCalculatorCommands:
    """Test cases for hj and reider."""

    def test_hj(self, runner_with_no_logging):
        """1/7(1,3) resolves to a (−3, −2, −2) chain."""
        result = runner_with_no_logging.invoke(cli, ["hj", "7", "3"])
        assert result.exit_code == 0
        assert "1/7(1,3): n/q = [3, 2, 2]" in result.output
        assert "3/7" in result.output

    def test_hj_reversed_json(self, runner_with_no_logging):
        """Reversed orientation flips the discrepancies."""
        result = runner_with_no_logging.invoke(
            cli, ["hj", "7", "3", "--orientation", "reversed", "--json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["self_intersections"] == ["-2", "-2", "-3"]
        assert data["discrepancies"] == ["1/7", "2/7", "3/7"]
        assert data["du_val"] is False

    def test_hj_invalid(self, runner_with_no_logging):
        """Non-coprime input is a usage error."""
        result = runner_with_no_logging.invoke(cli, ["hj", "6", "4"])
        assert result.exit_code == 2

    def test_reider_two_points(self, runner_with_no_logging):
        """Two cases survive for K² = 9, deg Z = 2."""
        result = runner_with_no_logging.invoke(cli, ["reider", "9", "2"])
        assert result.exit_code == 0
        assert "CaseI " in result.output
        assert "CaseII" in result.output

    def test_reider_one_point(self, runner_with_no_logging):
        """Single points are separated."""
        result = runner_with_no_logging.invoke(cli, ["reider", "9", "1"])
        assert result.exit_code == 0
        assert "No numerical case survives" in result.output

    def test_reider_without_filter(self, runner_with_no_logging):
        """Dropping hyperbolicity brings back the genus 1 case."""
        result = runner_with_no_logging.invoke(
            cli, ["reider", "9", "2", "--no-hyperbolic-filter", "--json"]
        )
        assert result.exit_code == 0
        d2_values = [c["d2"] for c in json.loads(result.output)]
        assert d2_values == ["1", "2", "3"]

    def test_reider_show_rejected(self, runner_with_no_logging):
        """Rejected candidates show their reason."""
        result = runner_with_no_logging.invoke(
            cli, ["reider", "9", "2", "--show-rejected"]
        )
        assert result.exit_code == 0
        assert "Rejected" in result.output
        assert "hyperbolicity" in result.output

    def test_reider_invalid(self, runner_with_no_logging):
        """K² must be positive."""
        result = runner_with_no_logging.invoke(cli, ["reider", "0", "2"])
        assert result.exit_code == 2


class TestProcessOutput:
    """Stdout of a real process carries only the report."""

    def test_json_report_parses(self, temp_dir):
        """Logs stay off stdout, so the JSON report loads as is."""
        result = run_cli(
            ["-q", "report", "--scope", "registry", "--json"],
            temp_dir,
            BALLQ_LOG_LEVEL="DEBUG",
        )
        assert result.returncode == 0, result.stderr
        data = json.loads(result.stdout)
        assert len(data) == 8
        assert all(item["paper_anchor"] for item in data)

    def test_json_report_is_reproducible(self, temp_dir):
        """Two runs print byte-identical reports."""
        args = ["-q", "report", "--scope", "coverings", "--json"]
        first = run_cli(args, temp_dir)
        second = run_cli(args, temp_dir)
        assert first.returncode == 0, first.stderr
        assert first.stdout == second.stdout

    def test_logging_disabled(self, temp_dir):
        """BALLQ_LOG_ENABLED=false runs silently."""
        result = run_cli(
            ["report", "--scope", "reider", "--sequential"],
            temp_dir,
            BALLQ_LOG_ENABLED="false",
            BALLQ_QUIET="1",
        )
        assert result.returncode == 0, result.stderr
        assert "MISMATCH" in result.stdout
        assert "Error" not in result.stderr
