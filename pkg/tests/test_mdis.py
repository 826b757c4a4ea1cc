import random

import pytest

from kmdis.families import f
from kmdis.mdis import (
    circulant,
    cycle,
    enumerate_mdis,
    hypercube,
    maximal_independent_sets,
    mdi,
    mdi_star,
    power_graph,
)
from kmdis.tree_core import Graph, Tree, balls, bits, delete_vertex, leaves, path_tree, star_tree, to_list
from kmdis.treegen import TreeStream

import oracles


def test_small_examples():
    assert enumerate_mdis(path_tree(4), 2).as_lists() == [[1], [2], [0, 3]]
    assert mdi(star_tree(6), 1) == 2
    assert mdi(cycle(6), 2) == 3
    assert mdi(hypercube(3), 2) == 4


def test_power_graph_is_distance_threshold():
    p = power_graph(path_tree(6), 2)
    assert to_list(p.adj[0]) == [1, 2]
    assert to_list(p.adj[3]) == [1, 2, 4, 5]


def test_empty_graph():
    assert list(maximal_independent_sets(())) == [0]


def test_tree_sets_are_maximal_and_independent():
    for tr in TreeStream(9):
        for k in (1, 2, 3):
            fam = enumerate_mdis(tr, k)
            near = power_graph(tr, k).adj
            for s in fam.sets:
                assert all(not near[v] & s for v in bits(s))
                assert all(near[v] & s for v in range(tr.n) if not s >> v & 1)
            assert len(set(fam.sets)) == len(fam.sets)


def test_random_graphs_against_brute_force():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(1, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        k = rng.randint(1, 4)
        assert sorted(enumerate_mdis(g, k).as_lists()) == oracles.brute_mdis(n, edges, k)


def test_limit_stops_early():
    assert mdi(path_tree(12), 2, limit=3) == 4
    assert mdi(path_tree(4), 2, limit=10) == 3


def test_leaf_recursion_on_small_trees():
    for n in range(2, 9):
        for tr in TreeStream(n):
            for k in (1, 2, 3):
                for leaf in bits(leaves(tr)):
                    assert mdi(tr, k) == mdi(delete_vertex(tr, leaf), k) + mdi_star(tr, leaf, k)


def test_mdi_star_rejects_non_leaf():
    with pytest.raises(ValueError):
        mdi_star(path_tree(4), 1, 2)
    with pytest.raises(ValueError):
        mdi_star(Tree.from_edges(1, []), 0, 2)


def test_small_trees_have_n_sets():
    for n in range(1, 8):
        for tr in TreeStream(n):
            for k in range(max(1, n - 1), n + 2):
                assert mdi(tr, k) == n == f(k, n)


def test_circulant_and_cycle():
    fam = enumerate_mdis(cycle(8), 3)
    assert fam.as_lists() == [[0, 4], [1, 5], [2, 6], [3, 7]]
    c = circulant(24, [2, 3, 9, 12])
    assert all(len(s) == 3 for s in enumerate_mdis(c, 2).as_lists())
    with pytest.raises(ValueError):
        circulant(10, [6])
    with pytest.raises(ValueError):
        hypercube(7)


def test_balls_used_for_power_graph():
    tr = path_tree(5)
    assert power_graph(tr, 4).adj[0] == balls(tr, 4)[0] & ~1
