import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hellygraph import (  # noqa: E402
    Graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_trees,
    is_helly,
    king_grid,
    path_graph,
    star_graph,
)


@pytest.fixture(scope="session")
def k3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture(scope="session")
def p3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture(scope="session")
def p4():
    return Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture(scope="session")
def edge_ab():
    return Graph(["a", "b"], [("a", "b")])


@pytest.fixture(scope="session")
def single_vertex():
    return Graph(["v"], [])


@pytest.fixture(scope="session")
def connected_corpus():
    """All connected graphs with at most 7 vertices, one per isomorphism class."""
    out = []
    for n in range(1, 8):
        out.extend(enumerate_connected_graphs(n))
    return tuple(out)


@pytest.fixture(scope="session")
def named_families():
    """Trees to 10 vertices, K_n to 6, C_n to 8, king windows to 4x4."""
    out = []
    for n in range(1, 11):
        out.extend(enumerate_trees(n))
    for n in range(2, 7):
        out.append(complete_graph(n))
    for n in range(3, 9):
        out.append(cycle_graph(n))
    for r in range(1, 5):
        for c in range(r, 5):
            out.append(king_grid(r, c))
    return tuple(out)


@pytest.fixture(scope="session")
def helly_corpus(connected_corpus):
    """The Helly members of the exhaustive corpus (validated in acceptance)."""
    return tuple(g for g in connected_corpus if is_helly(g).helly)


@pytest.fixture(scope="session")
def small_helly_corpus(helly_corpus):
    return tuple(g for g in helly_corpus if g.vertex_count <= 5)
