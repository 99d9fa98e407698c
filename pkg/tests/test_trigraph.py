import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twintri.trigraph import BLACK, NONE, RED, EdgeColor, Trigraph

import helpers


def test_from_graph_triangle():
    g = Trigraph.from_graph([(1, 2), (2, 3), (1, 3)], 3)
    assert list(g.black_edges()) == [(1, 2), (1, 3), (2, 3)]
    assert list(g.red_edges()) == []
    assert g.live_count == 3


def test_from_graph_single_vertex():
    g = Trigraph.from_graph([], 1)
    assert g.live_count == 1
    assert list(g.black_edges()) == []


def test_from_graph_dedups_symmetric_pairs():
    g = Trigraph.from_graph([(1, 2), (2, 1)], 2)
    assert list(g.black_edges()) == [(1, 2)]


def test_from_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        Trigraph.from_graph([(2, 2)], 3)


def test_from_graph_rejects_out_of_range():
    with pytest.raises(ValueError):
        Trigraph.from_graph([(1, 4)], 3)


def test_edge_color_triangle():
    g = Trigraph.from_graph([(1, 2), (2, 3), (1, 3)], 3)
    assert g.edge_color(1, 2) is BLACK
    with pytest.raises(ValueError):
        g.edge_color(1, 1)


def test_edge_color_after_path_contraction():
    # 3 is adjacent to 2 but not 1, so the merged vertex sees it in red
    g = Trigraph.from_graph([(1, 2), (2, 3)], 3)
    g.contract(1, 2)
    assert g.edge_color(4, 3) is RED
    with pytest.raises(ValueError):
        g.edge_color(1, 3)  # 1 is dead


def test_contract_triangle_keeps_black():
    g = Trigraph.from_graph([(1, 2), (2, 3), (1, 3)], 3)
    g.contract(1, 2)
    assert g.edge_color(4, 3) is BLACK


def test_contract_path_endpoints_black():
    g = Trigraph.from_graph([(1, 2), (2, 3)], 3)
    g.contract(1, 3)
    assert g.edge_color(4, 2) is BLACK


def test_contract_rejects_dead_vertex():
    g = Trigraph.from_graph([(1, 2), (2, 3)], 3)
    g.contract(1, 2)
    with pytest.raises(ValueError):
        g.contract(1, 3)


def test_contract_rejects_wrong_new_id():
    g = Trigraph.from_graph([(1, 2), (2, 3)], 3)
    with pytest.raises(ValueError):
        g.contract(1, 2, w=5)


def test_red_degrees():
    g = Trigraph.from_graph([(1, 2), (2, 3), (1, 3)], 3)
    assert g.max_red_degree() == 0
    p = Trigraph.from_graph([(1, 2), (2, 3)], 3)
    p.contract(1, 2)
    assert p.red_degree(4) == 1
    assert p.max_red_degree() == 1
    with pytest.raises(ValueError):
        p.red_degree(1)


def test_star_leaf_twins_stay_red_free():
    g = Trigraph.from_graph([(1, 2), (1, 3), (1, 4)], 4)
    g.contract(2, 3)
    assert g.max_red_degree() == 0
    assert g.edge_color(5, 1) is BLACK


def test_serialize_is_canonical():
    g1 = Trigraph.from_graph([(2, 3), (1, 2)], 3)
    g2 = Trigraph.from_graph([(1, 2), (3, 2)], 3)
    assert g1.serialize() == g2.serialize()
    g1.contract(1, 2)
    g2.contract(1, 2)
    assert g1.serialize() == g2.serialize()
    assert "r 3 4" in g1.serialize()


def _random_graph(rng, n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return [e for e in pairs if rng.random() < rng.choice([0.2, 0.5, 0.8])]


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 8), st.randoms(use_true_random=False))
def test_contraction_matches_pairwise_rule(n, rng):
    """Colors after every contraction must match the pair-by-pair rule
    evaluated by an independent implementation."""
    edges = _random_graph(rng, n)
    g = Trigraph.from_graph(edges, n)
    colors = {helpers.key(u, v): "b" for u, v in g.black_edges()}
    live = set(range(1, n + 1))
    tag = {BLACK: "b", RED: "r", NONE: None}
    while len(live) > 1:
        u, v = rng.sample(sorted(live), 2)
        w = g.next_id
        g.contract(u, v)
        live, colors = helpers.apply_contraction(colors, live, u, v, w)
        g.check_consistent()
        assert g.live_count == len(live)
        for a, b in itertools.combinations(sorted(live), 2):
            assert tag[g.edge_color(a, b)] == colors.get(helpers.key(a, b))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.randoms(use_true_random=False))
def test_exactly_one_color_per_pair(n, rng):
    edges = _random_graph(rng, n)
    g = Trigraph.from_graph(edges, n)
    while g.live_count > 1:
        live = g.live_vertices()
        for a, b in itertools.combinations(live, 2):
            # edge_color returning exactly one member is the partition claim;
            # also black and red never share a pair
            c = g.edge_color(a, b)
            assert isinstance(c, EdgeColor)
            in_black = b in g.black_adj[a]
            in_red = b in g.red_adj[a]
            assert not (in_black and in_red)
            assert (c is BLACK) == in_black
            assert (c is RED) == in_red
        u, v = rng.sample(live, 2)
        g.contract(u, v)


def test_vertex_count_decreases_to_one():
    rng = random.Random(7)
    for n in (2, 4, 6, 9):
        g = Trigraph.from_graph(_random_graph(rng, n), n)
        for k in range(n - 1):
            u, v = rng.sample(g.live_vertices(), 2)
            g.contract(u, v)
            assert g.live_count == n - 1 - k
        assert g.live_count == 1


def test_adjacency_stays_sorted_with_isolated_vertices():
    # disconnected input with isolated vertices is allowed
    g = Trigraph.from_graph([(1, 2)], 5)
    g.contract(3, 4)
    g.contract(6, 5)
    g.contract(1, 7)
    g.check_consistent()
    assert g.live_count == 2
