import pytest

from nanocone.graph import Graph


def cycle(m):
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def path(m):
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def p3():
    return path(3)
