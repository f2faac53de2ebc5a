import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from krasner.constructions import quotient
from krasner.fixtures import domain4, hyperfield5, hyperfield5_squared, s4, s4_noone, swap


@pytest.fixture(scope="session")
def P():
    return hyperfield5()


@pytest.fixture(scope="session")
def G():
    return domain4()


@pytest.fixture(scope="session")
def S4():
    return s4()


@pytest.fixture(scope="session")
def S4n():
    return s4_noone()


@pytest.fixture(scope="session")
def PP():
    return hyperfield5_squared()


@pytest.fixture(scope="session")
def sw(PP):
    return swap(PP)


@pytest.fixture(scope="session")
def S4q(S4):
    return quotient(S4, {0, 1})


def ix(H, *labels):
    return tuple(H.index(x) for x in labels)


def ids(H, *labels):
    return frozenset(H.index(x) for x in labels)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.verdict_line(n))
