from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
LEVELS_DIR = REPO_ROOT / "levels"
QUIZZES_DIR = REPO_ROOT / "quizzes"

_acceptance_results: dict[str, str] = {}


@pytest.fixture(scope="session")
def levels_dir() -> Path:
    return LEVELS_DIR


@pytest.fixture(scope="session")
def quizzes_dir() -> Path:
    return QUIZZES_DIR


@pytest.fixture(scope="session")
def content():
    from qubitcat.content import load_content

    return load_content(LEVELS_DIR, QUIZZES_DIR)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_results):
        outcome = _acceptance_results[nodeid]
        label = nodeid.split("::")[-1].removeprefix("test_")
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
