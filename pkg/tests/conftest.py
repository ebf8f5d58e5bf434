import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from twovsb.fixtures import load  # noqa: E402
from twovsb.graph import Digraph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fig1a():
    return load("fig1a")


@pytest.fixture
def fig1b():
    return load("fig1b")


@pytest.fixture
def fig1c():
    return load("fig1c")


@pytest.fixture
def tri():
    return load("tri")


@pytest.fixture
def k4bi():
    return load("k4bi")


def random_digraph(n, p, seed):
    rng = random.Random(seed)
    arcs = [(u, w) for u in range(n) for w in range(n) if u != w and rng.random() < p]
    return Digraph(range(n), arcs)


@st.composite
def digraphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, w) for u in range(n) for w in range(n) if u != w]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(range(n), [a for a, keep in zip(pairs, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
