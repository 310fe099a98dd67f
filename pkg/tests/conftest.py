"""Shared fixtures: catalog data, the full classification sweep, and a
terminal summary that prints one pass/fail line per acceptance criterion."""

import pytest
from hypothesis import HealthCheck, settings

from stableforms.catalog import ClassifyConfig, classify_all, load_catalog

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# One line per acceptance criterion, recorded by tests/test_acceptance.py
# and printed after the run so the verdicts survive output capture.
ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, ok: bool, text: str) -> None:
    ACCEPTANCE_LINES[number] = (
        f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture(scope="session")
def entries():
    return load_catalog()


@pytest.fixture(scope="session")
def entries_by_name(entries):
    return {e.name: e for e in entries}


@pytest.fixture(scope="session")
def full_sweep(entries):
    """The complete catalog replay, computed once per session."""
    return classify_all(entries, ClassifyConfig())
