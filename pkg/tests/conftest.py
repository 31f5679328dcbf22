import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "neutrosophic", *map(str, args)],
        input=stdin,
        capture_output=True,
    )


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  AC{number:<2} {title}: {detail}")
