import pytest

from susy_hbs.ansatz import make_ansatz
from susy_hbs.partner import build_pair

GAUSS_OFFSETS = (0.5, 1.0, -2.0)
ASYM = (("tanh", 2.0), ("erf", 2.0), ("xgauss", 2.0))

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def gauss_pairs():
    return {A: build_pair(make_ansatz("gaussian", A)) for A in GAUSS_OFFSETS}


@pytest.fixture(scope="session")
def asym_pairs():
    return {fam: build_pair(make_ansatz(fam, A)) for fam, A in ASYM}


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
