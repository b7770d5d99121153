import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pnsat.formula import example_formula  # noqa: E402

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def example():
    return example_formula()


@pytest.fixture
def criterion():
    """Record a named acceptance verdict; all verdicts are listed at the end of the run."""
    def record(name: str, passed: bool, detail: str = ""):
        _CRITERIA.append((name, passed, detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
