import pytest

from pluckertree.tree import (
    CATERPILLAR6, EXAMPLE33_15, FIGURE2_13, FOUR_CHERRY8, SNOWFLAKE, parse_newick,
)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def snowflake():
    return parse_newick(SNOWFLAKE)


@pytest.fixture
def cat6():
    return parse_newick(CATERPILLAR6)


@pytest.fixture
def four_cherry8():
    return parse_newick(FOUR_CHERRY8)


@pytest.fixture
def figure2():
    return parse_newick(FIGURE2_13)


@pytest.fixture
def example33():
    return parse_newick(EXAMPLE33_15)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
