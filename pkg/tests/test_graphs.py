import random

import pytest

from hoffman.graphs import (
    Graph,
    GraphFormatError,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    empty_graph,
    from_edges,
    from_graph6,
    independence_number,
    integer_partitions,
    is_regular,
    path_graph,
    star_graph,
    to_graph6,
)
from graphutil import fig1_graph, petersen_graph, random_graph


class TestGraphBasics:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))  # asymmetric
        with pytest.raises(ValueError):
            Graph(1, (0b1,))  # loop

    def test_edges_and_degrees(self):
        g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g.num_edges == 3
        assert g.degrees() == (1, 2, 2, 1)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_induced_and_relabel(self):
        g = cycle_graph(5)
        h = g.induced([0, 1, 2])
        assert h.edges() == [(0, 1), (1, 2)]
        r = g.relabel([4, 3, 2, 1, 0])
        assert sorted(r.degrees()) == [2] * 5


class TestGraph6:
    def test_known_encodings(self):
        assert to_graph6(complete_graph(3)) == "Bw"
        assert to_graph6(Graph(1, (0,))) == "@"
        assert from_graph6("A?").n == 2
        assert from_graph6("A?").num_edges == 0

    def test_reference_encoder_agreement(self):
        nx = pytest.importorskip("networkx")
        samples = [
            complete_graph(3),
            path_graph(3),
            path_graph(4),
            cycle_graph(6),
            petersen_graph(),
            fig1_graph(),
        ]
        for g in samples:
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(ref, header=False).strip().decode()
            assert to_graph6(g) == expected

    def test_round_trip_random(self):
        rng = random.Random(7)
        for n in range(13):
            for _ in range(20):
                g = random_graph(n, 0.4, rng)
                assert from_graph6(to_graph6(g)) == g

    def test_decode_errors_carry_offsets(self):
        with pytest.raises(GraphFormatError) as exc:
            from_graph6("")
        assert exc.value.offset == 0
        with pytest.raises(GraphFormatError) as exc:
            from_graph6(chr(20) + "w")
        assert exc.value.offset == 0
        with pytest.raises(GraphFormatError) as exc:
            from_graph6("Bw" + "w")  # trailing garbage
        assert exc.value.offset == 2
        with pytest.raises(GraphFormatError) as exc:
            from_graph6("B")  # truncated
        assert exc.value.offset == 1
        with pytest.raises(GraphFormatError) as exc:
            from_graph6("B" + chr(20))  # out-of-range data byte
        assert exc.value.offset == 1

    def test_encode_rejects_large(self):
        with pytest.raises(ValueError):
            to_graph6(empty_graph(63))


class TestPartitions:
    def test_examples(self):
        assert integer_partitions(3, 3) == [(1, 1, 1)]
        assert integer_partitions(6, 3) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
        assert integer_partitions(9, 3) == [
            (7, 1, 1), (6, 2, 1), (5, 3, 1), (5, 2, 2), (4, 4, 1), (4, 3, 2), (3, 3, 3),
        ]

    def test_count_matches_dp(self):
        # p(n, k) via the textbook recurrence p(n,k) = p(n-1,k-1) + p(n-k,k)
        table = {}
        for n in range(0, 21):
            for k in range(0, n + 1):
                if k == 0:
                    table[n, k] = 1 if n == 0 else 0
                else:
                    table[n, k] = table.get((n - 1, k - 1), 0) + table.get((n - k, k), 0)
        for n in range(1, 21):
            for k in range(1, n + 1):
                parts = integer_partitions(n, k)
                assert len(parts) == table[n, k]
                assert len(set(parts)) == len(parts)
                for p in parts:
                    assert sum(p) == n and len(p) == k
                    assert all(a >= b for a, b in zip(p, p[1:]))

    def test_invalid(self):
        with pytest.raises(ValueError):
            integer_partitions(2, 3)


class TestComponents:
    def test_examples(self):
        assert connected_components(complete_graph(3)) == [(0, 1, 2)]
        two_k3 = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert connected_components(two_k3) == [(0, 1, 2), (3, 4, 5)]
        assert connected_components(empty_graph(4)) == [(0,), (1,), (2,), (3,)]


class TestIndependence:
    def test_examples(self):
        assert independence_number(fig1_graph()) == 5
        assert independence_number(complete_graph(5)) == 1
        assert independence_number(cycle_graph(5)) == 2

    def test_against_exhaustive_subsets(self):
        import itertools

        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(1, 8)
            g = random_graph(n, 0.5, rng)
            best = 0
            for r in range(n, 0, -1):
                for sub in itertools.combinations(range(n), r):
                    if all(not g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                        best = r
                        break
                if best:
                    break
            assert independence_number(g) == best

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            independence_number(Graph(0, ()))


class TestRegularity:
    def test_examples(self):
        assert is_regular(cycle_graph(6)) == 2
        assert is_regular(fig1_graph()) is None
        assert is_regular(Graph(1, (0,))) == 0
        assert is_regular(complete_multipartite(2, 2, 2)) == 4


def test_star_and_multipartite_shapes():
    s = star_graph(4)
    assert s.degrees() == (4, 1, 1, 1, 1)
    k222 = complete_multipartite(2, 2, 2)
    assert k222.num_edges == 12
    assert all(d == 4 for d in k222.degrees())
