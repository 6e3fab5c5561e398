"""Test configuration and fixtures."""

import shutil
import tempfile
from pathlib import Path

import pytest
from click.testing import CliRunner

from ballq_verify.config.settings import LoggingSettings, Settings
from ballq_verify.lattice.intersection import IntersectionLattice


@pytest.fixture
def runner_with_no_logging():
    """Create a CliRunner with logging disabled."""
    runner = CliRunner()

    # Create a wrapper that adds the env variable to all invocations
    original_invoke = runner.invoke

    def invoke_with_env(cli, args=None, **kwargs):
        env = kwargs.get("env", {})
        env["BALLQ_LOG_ENABLED"] = "false"
        kwargs["env"] = env
        return original_invoke(cli, args, **kwargs)

    runner.invoke = invoke_with_env
    return runner


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


@pytest.fixture
def test_logging_settings():
    """Create test logging settings with logging disabled."""
    return LoggingSettings(enabled=False, level="CRITICAL", format="console")


@pytest.fixture
def test_settings(test_logging_settings):
    """Create test application settings."""
    return Settings(logging=test_logging_settings, debug=True)


@pytest.fixture
def picard_one():
    """NS/tor of a fake projective plane: H with H·H = 1."""
    return IntersectionLattice(("H",), ((1,),), name="picard-one")


@pytest.fixture
def hyperbolic_plane():
    """Two isotropic classes meeting once."""
    return IntersectionLattice(("e", "f"), ((0, 1), (1, 0)), name="U")


@pytest.fixture
def diagonal_lattice():
    """diag(1, -1, -1)."""
    return IntersectionLattice(
        ("h", "e1", "e2"),
        ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
        name="diag",
    )
