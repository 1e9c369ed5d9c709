import pytest

from lacsplit.fieldcore import make_context

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def F7():
    return make_context(7)


@pytest.fixture(scope="session")
def F13():
    return make_context(13)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
