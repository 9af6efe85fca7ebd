import pytest

from hyperrep.core import Hypergraph


@pytest.fixture
def two_edges() -> Hypergraph:
    return Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])


@pytest.fixture
def single_edge() -> Hypergraph:
    return Hypergraph(3, 4, [(0, 1, 2)])


@pytest.fixture
def complete4() -> Hypergraph:
    # all 3-subsets of 4 vertices
    return Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


@pytest.fixture
def path3() -> Hypergraph:
    # two edges sharing vertex 2, degree 2 at vertex 2
    return Hypergraph(3, 5, [(0, 1, 2), (2, 3, 4)])
