from pathlib import Path

import pytest

from surfcyc import fixtures as F
from surfcyc.corpus import read_corpus


@pytest.fixture
def t1():
    return F.torus1()


@pytest.fixture
def grid3():
    return F.torus_grid(3, 3)


@pytest.fixture
def cyl3():
    return F.cylinder_grid(3, 3)


CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus():
    """The shipped corpus, parsed once per session."""
    return read_corpus(CORPUS_DIR)


# one verdict line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
