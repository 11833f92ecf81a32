import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toughfactor import Graph


@pytest.fixture
def k4():
    import itertools

    return Graph.from_edges(4, itertools.combinations(range(4), 2))


@pytest.fixture
def k13():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k23():
    return Graph.from_edges(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])


@pytest.fixture
def two_triangles():
    """Two triangles A={0,1,2}, B={3,4,5} linked through T={6,7,8}."""
    edges = [
        (0, 1), (1, 2), (0, 2),
        (3, 4), (4, 5), (3, 5),
        (6, 0), (6, 3), (7, 1), (7, 4), (8, 2), (8, 5),
    ]
    return Graph.from_edges(9, edges)
