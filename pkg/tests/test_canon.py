import itertools
import random

from hoffman.canon import canonical_form, is_isomorphic
from hoffman.graphs import (
    Coloring,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
)
from graphutil import (
    all_connected_graphs,
    brute_isomorphic,
    random_graph,
    random_permutation,
)


def test_relabelled_c4_same_form():
    c4a = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(c4a) == canonical_form(c4b)


def test_k3_vs_p3_differ():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))


def test_paw_all_labelings_one_orbit():
    paw = from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    forms = set()
    for perm in itertools.permutations(range(4)):
        forms.add(canonical_form(paw.relabel(perm)))
    assert len(forms) == 1


def test_soundness_under_random_permutation():
    rng = random.Random(3)
    for _ in range(120):
        n = rng.randint(1, 10)
        g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
        perm = random_permutation(n, rng)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_completeness_small_scale():
    # all connected graphs on <= 6 vertices: canonical forms separate exactly
    # the brute-force isomorphism classes
    for n in range(1, 7):
        graphs = all_connected_graphs(n)
        forms = [canonical_form(g) for g in graphs]
        assert len(set(forms)) == len(forms)
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not brute_isomorphic(graphs[i], graphs[j])


def test_known_graph_counts():
    # OEIS A001349: connected graphs on n nodes
    expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    for n, count in expected.items():
        assert len(all_connected_graphs(n)) == count


def test_colored_forms_respect_partition():
    p3 = path_graph(3)
    ends = Coloring(((0, 2), (1,)))
    split = Coloring(((0, 1), (2,)))
    assert canonical_form(p3, ends) != canonical_form(p3, split)
    # recoloring isomorphic placements agree
    p3b = from_edges(3, [(2, 1), (1, 0)])
    assert canonical_form(p3, ends) == canonical_form(p3b, ends)


class TestIsIsomorphic:
    def test_examples(self):
        c4 = cycle_graph(4)
        assert is_isomorphic(c4, c4.relabel([2, 0, 3, 1]))
        c6 = cycle_graph(6)
        two_k3 = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_isomorphic(c6, two_k3)
        # C6 plus long diagonals is 3-regular bipartite on 6 vertices, i.e. K_{3,3}
        c6_diag = c6.with_edges([(0, 3), (1, 4), (2, 5)])
        assert is_isomorphic(c6_diag, complete_bipartite(3, 3))
        assert brute_isomorphic(c6_diag, complete_bipartite(3, 3))

    def test_matches_brute_force(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 7)
            g = random_graph(n, 0.5, rng)
            if rng.random() < 0.5:
                h = g.relabel(random_permutation(n, rng))
            else:
                h = random_graph(n, 0.5, rng)
            assert is_isomorphic(g, h) == brute_isomorphic(g, h)
