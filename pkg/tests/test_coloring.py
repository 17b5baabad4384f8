import itertools
import random

from hoffman.coloring import chromatic_number, find_coloring, proper_colorings
from hoffman.graphs import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    from_edges,
)
from graphutil import all_connected_graphs, fig1_graph, petersen_graph, random_graph


def brute_chromatic(g):
    """Oracle: try all assignments with at most k colors, increasing k."""
    for k in range(1, g.n + 1):
        for assign in itertools.product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges()):
                return k
    return g.n


def test_examples():
    assert chromatic_number(fig1_graph()) == 3
    for n in range(1, 7):
        assert chromatic_number(complete_graph(n)) == n
    assert chromatic_number(petersen_graph()) == 3
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(cycle_graph(6)) == 2


def test_disconnected_takes_max():
    g = disjoint_union([complete_graph(4), cycle_graph(5)])
    assert chromatic_number(g) == 4


def test_against_brute_force():
    rng = random.Random(21)
    for _ in range(30):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        assert chromatic_number(g) == brute_chromatic(g)
    for n in range(2, 7):
        for g in all_connected_graphs(n):
            assert chromatic_number(g) == brute_chromatic(g)


def test_find_coloring_is_proper_and_optimal():
    for g in [fig1_graph(), petersen_graph(), complete_multipartite(3, 3, 3)]:
        chi = chromatic_number(g)
        c = find_coloring(g, chi)
        assert c is not None and c.is_proper(g) and c.num_classes == chi
        assert find_coloring(g, chi - 1) is None


def test_proper_colorings_enumerates_partitions_once():
    # C5 with 3 colors: count distinct partitions against a brute-force census
    g = cycle_graph(5)
    seen = set()
    for col in proper_colorings(g, 3):
        assert col.is_proper(g)
        seen.add(frozenset(frozenset(c) for c in col.classes))
    brute = set()
    for assign in itertools.product(range(3), repeat=5):
        if all(assign[u] != assign[v] for u, v in g.edges()):
            classes = {}
            for v, c in enumerate(assign):
                classes.setdefault(c, set()).add(v)
            if len(classes) == 3:
                brute.add(frozenset(frozenset(c) for c in classes.values()))
    assert seen == brute
    assert len(list(proper_colorings(g, 3))) == len(seen)


def test_proper_colorings_k222():
    g = complete_multipartite(2, 2, 2)
    cols = list(proper_colorings(g, 3))
    assert len(cols) == 1
    assert sorted(tuple(c) for c in cols[0].classes) == [(0, 1), (2, 3), (4, 5)]
