import pytest

from f4verma import generate, load_fixtures, match_fixtures
from f4verma.fixtures import assign_names
from f4verma.verma import f4_root_system


@pytest.fixture(scope="session")
def rs():
    return f4_root_system()


@pytest.fixture(scope="session")
def entries():
    return load_fixtures()


@pytest.fixture(scope="session")
def report(graph_raw, entries):
    return match_fixtures(graph_raw, entries)


@pytest.fixture(scope="session")
def graph_raw():
    return generate()


@pytest.fixture(scope="session")
def graph(graph_raw, report):
    """Symbolic multiplet with names attached.  Treat as read-only."""
    return assign_names(graph_raw, report)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
