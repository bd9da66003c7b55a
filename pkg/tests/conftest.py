import random

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
