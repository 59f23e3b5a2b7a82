"""Shared helpers: CLI invocation via a real subprocess."""

import subprocess
import sys

import pytest


def run_cli(*args):
    """Run the installed CLI module and capture raw bytes."""
    return subprocess.run(
        [sys.executable, "-m", "goldenvec", *args],
        capture_output=True,
    )


@pytest.fixture(scope="session")
def verify_runs():
    """Two identical verify invocations, shared by the determinism and gate tests."""
    return run_cli("verify"), run_cli("verify")
