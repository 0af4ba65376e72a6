from fractions import Fraction

import pytest

from tropitree.pipeline import tree_corpus
from tropitree.tree import balanced_binary_tree, parse_newick, unroot

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def eight():
    """Balanced rooted eight-leaf tree with unit edges."""
    return balanced_binary_tree(3)


@pytest.fixture(scope="session")
def eight_unrooted(eight):
    return unroot(eight)


@pytest.fixture(scope="session")
def four():
    return parse_newick("((1:1,2:1):1,(3:1,4:1):1);")


@pytest.fixture(scope="session")
def corpus():
    return tree_corpus(50, 0, 4, 8)


def frac(x):
    return Fraction(x)
