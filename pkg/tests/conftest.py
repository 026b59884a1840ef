import pytest

from fafft.field import CantorField

# Summary lines recorded by the acceptance battery (tests/test_acceptance.py),
# replayed at the end of the run so the per-criterion outcome is visible even
# with output capture on.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def gf4():
    return CantorField(1)


@pytest.fixture(scope="session")
def gf16():
    return CantorField(2)


@pytest.fixture(scope="session")
def gf256():
    return CantorField(3)


@pytest.fixture(scope="session")
def gf64k():
    return CantorField(4)


@pytest.fixture(scope="session")
def field():
    """The default full-size field GF(2^64)."""
    return CantorField(6)
