from __future__ import annotations

import pytest

from arthur_calc.dsl import parse

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []

SP2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)"
SO3 = "SO(3,split): one[1,O]@S(2)xS(1)"


@pytest.fixture
def sp2():
    return parse(SP2)


@pytest.fixture
def so3():
    return parse(SO3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
