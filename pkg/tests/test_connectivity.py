"""Components, edge connectivity, vertex connectivity."""

import random

from ftclique import (
    complete_graph,
    components,
    connectivity,
    cycle_graph,
    disjoint_union,
    edge_connectivity,
    empty_graph,
    is_connected,
    path_graph,
    star_construction,
    vertex_connectivity,
)
from helpers import (
    edge_connectivity_bruteforce,
    random_graph,
    vertex_connectivity_bruteforce,
)


def test_components_and_is_connected():
    g = disjoint_union(complete_graph(3), path_graph(2))
    assert components(g) == [(0, 1, 2), (3, 4)]
    assert not is_connected(g)
    assert is_connected(cycle_graph(5))
    assert components(empty_graph(0)) == []
    assert is_connected(empty_graph(1))
    assert not is_connected(empty_graph(2))


def test_known_small_values():
    assert edge_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(complete_graph(4)) == 3
    assert edge_connectivity(cycle_graph(7)) == 2
    assert vertex_connectivity(cycle_graph(7)) == 2
    assert edge_connectivity(path_graph(5)) == 1
    assert vertex_connectivity(path_graph(5)) == 1
    # complete graphs have no separator; the convention is n - 1
    assert vertex_connectivity(complete_graph(1)) == 0
    assert vertex_connectivity(complete_graph(2)) == 1


def test_disconnected_and_degenerate():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert edge_connectivity(g) == 0
    assert vertex_connectivity(g) == 0
    assert edge_connectivity(empty_graph(1)) == 0
    assert vertex_connectivity(empty_graph(0)) == 0


def test_hub_family_reaches_the_degree_floor():
    # one hub vertex joined to two triangles: lambda = c + k - 1 = 3
    g = star_construction(1, 2, 3)
    assert edge_connectivity(g) == 3
    assert edge_connectivity_bruteforce(g) == 3
    # the hub is a cutvertex, so kappa stays at k
    assert vertex_connectivity(g) == 1


def test_matches_bruteforce_on_random_graphs():
    rng = random.Random(5150)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, rng.choice([0.25, 0.5, 0.75]))
        assert edge_connectivity(g) == edge_connectivity_bruteforce(g)
        assert vertex_connectivity(g) == vertex_connectivity_bruteforce(g)


def test_whitney_inequalities():
    rng = random.Random(77)
    for _ in range(80):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.random())
        kappa = vertex_connectivity(g)
        lam = edge_connectivity(g)
        assert kappa <= lam <= min(g.degrees())


def test_connectivity_bundle():
    info = connectivity(cycle_graph(5))
    assert info.components == ((0, 1, 2, 3, 4),)
    assert info.vertex_connectivity == 2
    assert info.edge_connectivity == 2
    split = connectivity(disjoint_union(complete_graph(2), complete_graph(2)))
    assert split.vertex_connectivity == 0
    assert split.edge_connectivity == 0
