import os
import subprocess
import sys

import pytest

SRC_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, "src"))


@pytest.fixture
def run_cli():
    """Run the installed CLI in a subprocess and return the CompletedProcess."""

    def run(*args, expect=None):
        env = dict(os.environ)
        env["PYTHONPATH"] = SRC_DIR + os.pathsep + env.get("PYTHONPATH", "")
        proc = subprocess.run(
            [sys.executable, "-m", "quatpert", *args],
            capture_output=True,
            text=True,
            env=env,
        )
        if expect is not None:
            assert proc.returncode == expect, (proc.stdout, proc.stderr)
        return proc

    return run
