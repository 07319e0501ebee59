import json

import pytest

from hellygraph import (
    Graph,
    HellyLibError,
    all_pairs_distances,
    ball,
    cycle_graph,
    distinct_balls,
    graph_from_json,
    graph_to_json,
    is_clique,
    is_helly,
    is_helly_bruteforce,
    king_grid,
    path_graph,
)
from oracles import bfs_distances, dumb_is_helly


def test_graph_rejects_malformed_inputs():
    with pytest.raises(ValueError):
        Graph([], [])
    with pytest.raises(ValueError):
        Graph(["a", "a"], [])
    with pytest.raises(ValueError):
        Graph(["a", "b"], [("a", "a")])
    with pytest.raises(ValueError):
        Graph(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        Graph(["a", "b"], [("a", "z")])


def test_disconnected_graph_names_two_vertices():
    with pytest.raises(HellyLibError, match="graph not connected.*'a'.*'c'"):
        Graph(["a", "b", "c"], [("a", "b")])


def test_distances_single_vertex(single_vertex):
    dm = all_pairs_distances(single_vertex)
    assert dm["v", "v"] == 0


def test_distances_path(p3):
    dm = all_pairs_distances(p3)
    assert dm["a", "c"] == 2
    assert dm["a", "b"] == 1


def test_distances_king_grid_matches_bfs_oracle():
    g = king_grid(3, 3)
    oracle = bfs_distances(g.vertices, g.edges())
    dm = all_pairs_distances(g)
    for u in g.vertices:
        for v in g.vertices:
            assert dm[u, v] == oracle[(u, v)]
    assert dm["0,0", "2,2"] == 2


def test_metric_axioms_on_corpus(connected_corpus):
    for g in connected_corpus[:200]:
        dm = all_pairs_distances(g)
        vs = g.vertices
        for u in vs:
            assert dm[u, u] == 0
            for v in vs:
                assert dm[u, v] == dm[v, u]
                assert (dm[u, v] == 1) == g.is_adjacent(u, v)
                for w in vs:
                    assert dm[u, w] <= dm[u, v] + dm[v, w]


def test_ball_examples(k3, p3):
    assert ball(k3, "a", 0).members == frozenset(["a"])
    assert ball(p3, "a", 1).members == frozenset(["a", "b"])
    c4 = cycle_graph(4)
    assert ball(c4, "0", 1).members == frozenset(["3", "0", "1"])
    assert ball(p3, "a", 99).members == frozenset(["a", "b", "c"])
    with pytest.raises(ValueError):
        ball(p3, "z", 1)
    with pytest.raises(ValueError):
        ball(p3, "a", -1)


def test_ball_matches_distance_filter(connected_corpus):
    for g in connected_corpus[:100]:
        dm = all_pairs_distances(g)
        for v in g.vertices:
            for r in range(g.diameter() + 1):
                expected = frozenset(w for w in g.vertices if dm[v, w] <= r)
                assert ball(g, v, r).members == expected


def test_is_clique(k3, p3):
    assert is_clique(p3, ["a"])
    assert is_clique(p3, ["a", "b"])
    assert not is_clique(p3, ["a", "c"])
    assert is_clique(k3, ["a", "b", "c"])
    with pytest.raises(ValueError):
        is_clique(p3, [])


def test_is_helly_examples(k3, p4):
    assert is_helly(k3) == (True, None)
    assert is_helly(p4).helly
    res = is_helly(cycle_graph(4))
    assert not res.helly
    assert {(b.center, b.radius) for b in res.witness} == {
        ("0", 1),
        ("1", 1),
        ("2", 1),
        ("3", 1),
    }


def test_witnesses_verified_on_non_helly_corpus(connected_corpus):
    for g in connected_corpus:
        res = is_helly(g)
        if res.helly:
            continue
        witness = res.witness
        assert len(witness) >= 3
        for i in range(len(witness)):
            for j in range(i + 1, len(witness)):
                assert witness[i].members & witness[j].members
        inter = set(witness[0].members)
        for b in witness[1:]:
            inter &= b.members
        assert not inter


def test_bruteforce_examples(k3):
    assert is_helly_bruteforce(k3, 10)
    assert not is_helly_bruteforce(cycle_graph(4), 4)
    assert not is_helly_bruteforce(cycle_graph(6), 3)
    # no witness family of size <= 2 can exist anywhere
    assert is_helly_bruteforce(cycle_graph(6), 2)


def test_bruteforce_refuses_large_graphs():
    with pytest.raises(ValueError, match="max_vertices"):
        is_helly_bruteforce(king_grid(4, 4), 4)
    assert is_helly_bruteforce(king_grid(4, 4), 16, max_vertices=16)


def test_bruteforce_matches_dumb_enumeration_small(connected_corpus):
    small = [g for g in connected_corpus if g.vertex_count <= 5]
    for g in small:
        nballs = len(distinct_balls(g))
        for cap in (2, 3, nballs):
            assert is_helly_bruteforce(g, cap) == dumb_is_helly(
                g.vertices, g.edges(), cap
            )


def test_triple_criterion_matches_bruteforce_eight_vertex_samples():
    for g in [cycle_graph(8), path_graph(8), king_grid(2, 4)]:
        expected = is_helly_bruteforce(g, len(distinct_balls(g)))
        assert is_helly(g).helly == expected


def test_named_family_helly_status():
    assert not is_helly(cycle_graph(4)).helly
    assert not is_helly(cycle_graph(5)).helly
    assert is_helly(path_graph(10)).helly
    assert is_helly(king_grid(4, 4)).helly


def test_graph_json_round_trip(p4):
    doc = graph_to_json(p4)
    again = graph_from_json(json.loads(json.dumps(doc)))
    assert graph_to_json(again) == doc


def test_graph_json_rejects_bad_documents():
    with pytest.raises(ValueError):
        graph_from_json({"vertices": ["a", "b"]})
    with pytest.raises(ValueError):
        graph_from_json({"vertices": ["a", 2], "edges": []})
    with pytest.raises(ValueError):
        graph_from_json({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})
    with pytest.raises(ValueError):
        graph_from_json({"vertices": ["a", "b"], "edges": [["a", "q"]]})
