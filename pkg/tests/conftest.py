import sys

import pytest

from rabiops.hilbert import make_space
from rabiops.operators import standard_operators
from rabiops.params import ModelParams


@pytest.fixture(scope="session")
def defaults():
    return ModelParams()


@pytest.fixture(scope="session")
def space20():
    return make_space(20)


@pytest.fixture(scope="session")
def ops20(space20, defaults):
    return standard_operators(space20, defaults)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not any(mod.RESULTS.values()):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
