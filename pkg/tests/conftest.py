import pytest

from kkmsperner.fixtures import fig1

ACCEPTANCE_LINES = []


@pytest.fixture
def fig1_instance():
    return fig1()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
