import sys

import pytest

from ncgb import GF, FreeAlgebra


@pytest.fixture
def R():
    """Q<x, y>, weights (1, 1), x > y."""
    return FreeAlgebra.make("xy")


@pytest.fixture
def R12():
    """Q<x, y>, weights (1, 2), x > y."""
    return FreeAlgebra.make("xy", [1, 2])


@pytest.fixture
def R7():
    return FreeAlgebra.make("xy", field=GF(7))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.format_results():
        terminalreporter.write_line(line)
