import pytest

from altperm import GroupParams, parse_window

WORKED_TEXT = "1 2^2 4 5^1 3^3"
WORKED_S_WORD = "s1 s0^2 s2 s1 s0^3 s4 s3 s2 s1 s0 s3 s2 s3 s4 s1 s2 s3"
WORKED_A_WORD = "a1' a0 a2 a1' a4 a3 a2 a1 a0^2 a3 a2 a3 a4 a1 a2 a3"


@pytest.fixture
def worked():
    return parse_window(WORKED_TEXT, 6)


@pytest.fixture
def p65():
    return GroupParams(6, 5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
