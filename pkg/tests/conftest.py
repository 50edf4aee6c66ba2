import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from active_matroid import k4 as _k4  # noqa: E402
from active_matroid.corpus import corpus as _corpus  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def k4():
    return _k4()


@pytest.fixture(scope="session")
def full_corpus():
    return _corpus()


@pytest.fixture(scope="session")
def small_corpus(full_corpus):
    return [M for M in full_corpus if len(M.ground) <= 5]


def S(text):
    """'146' -> frozenset({1, 4, 6}); single-digit labels only."""
    return frozenset(int(c) for c in str(text))


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        n = int(report.nodeid.rsplit("_", 1)[-1].split("[")[0])
        status = "PASS" if report.passed else "FAIL"
        detail = ACCEPTANCE_LINES.get(n, "")
        ACCEPTANCE_LINES[n] = f"criterion {n:2}: {status}  {detail}".rstrip()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
