import pytest

from msel import SimGraph


@pytest.fixture
def triangle():
    return SimGraph(3, [(0, 1, 0.5), (0, 2, 0.6), (1, 2, 0.7)])


@pytest.fixture
def two_triangles():
    """A strong triangle on 0..2 and a weak one on 3..5, no edges between."""
    return SimGraph(6, [
        (0, 1, 0.9), (0, 2, 0.9), (1, 2, 0.9),
        (3, 4, 0.1), (3, 5, 0.1), (4, 5, 0.1),
    ])


@pytest.fixture
def two_cluster():
    # strong triangle on 0..2, mediocre 5-clique on 3..7, no cross edges;
    # best group of size > 5 is everything (alpha 5.7/8 = 0.7125)
    edges = [(0, 1, 0.9), (0, 2, 0.9), (1, 2, 0.9)]
    for u in range(3, 8):
        for v in range(u + 1, 8):
            edges.append((u, v, 0.3))
    return SimGraph(8, edges)


@pytest.fixture
def walkthrough():
    """Six nodes whose densest group is {0, 2, 4, 5} with alpha 0.525.

    Node 1 and 3 share one weak edge, so they drag the average down and the
    peel removes node 0 (incident weight 0.6) first inside the main cluster.
    """
    return SimGraph(6, [
        (0, 2, 0.2), (0, 4, 0.2), (0, 5, 0.2),
        (2, 4, 0.3), (2, 5, 0.4), (4, 5, 0.8),
        (1, 3, 0.2),
    ])
