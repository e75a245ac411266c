# Shared instances for the test suites.
import pytest

from hlab.instances import Graph, figure1_graph


@pytest.fixture
def figure1():
    return figure1_graph()


@pytest.fixture
def p3():
    # a - b - c
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def k2():
    return Graph(2, [(0, 1)])


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c5():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def two_triangles():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def files(tmpdir):
    """Writes instance files into tmpdir and returns their paths."""

    def write(name, content):
        path = tmpdir.join(name)
        path.write(content)
        return str(path)

    return write
