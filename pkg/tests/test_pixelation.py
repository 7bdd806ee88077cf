import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GALLERY_EDGES
from rguard.errors import TooLarge
from rguard.generators import comb, random_domain
from rguard.pixelation import (adjacency_of, brute_force_edges, centroid_vision_agrees, check_chordal_bipartite,
                               edge_exists, edges_r_visible, pixelate)


def test_square_graph(square):
    g = pixelate(square)
    assert (g.n_h, g.n_v, g.m) == (1, 1, 1)
    assert edge_exists(g, 0, 0)


def test_l_domain_graph(l_domain):
    g = pixelate(l_domain)
    # h0 bottom, h1 top; v0 left, v1 right
    assert sorted(g.edges()) == [(0, 0), (0, 1), (1, 0)]
    assert not edge_exists(g, 1, 1)
    assert edge_exists(g, 0, 1)
    assert not edges_r_visible(g, (1, 0), (0, 1))
    assert centroid_vision_agrees(l_domain, g, (1, 0), (0, 1))


def test_gallery_graph_matches_reference(gallery):
    g = pixelate(gallery)
    assert (g.n_h, g.n_v, g.m) == (7, 8, 25)
    ours = nx.Graph((("h", h), ("v", v)) for h, v in g.edges())
    ref = nx.Graph((("h", h), ("v", v)) for h, v in GALLERY_EDGES)
    same_side = lambda a, b: a["side"] == b["side"]        # noqa: E731
    for graph in (ours, ref):
        nx.set_node_attributes(graph, {u: u[0] for u in graph}, "side")
    assert nx.is_isomorphic(ours, ref, node_match=same_side)
    assert check_chordal_bipartite(adjacency_of(g))


def test_r_vision_is_reflexive_and_shared_slice():
    g = pixelate(comb(3))
    for e in g.edges():
        assert edges_r_visible(g, e, e)
    spine = max(range(g.n_h), key=lambda h: len(g.neighbors_of_h(h)))
    cols = g.neighbors_of_h(spine)
    assert edges_r_visible(g, (spine, cols[0]), (spine, cols[-1]))


def test_chordal_checker_on_synthetic_graphs():
    c4 = {"a": {"x", "y"}, "b": {"x", "y"}, "x": {"a", "b"}, "y": {"a", "b"}}
    assert check_chordal_bipartite(c4)
    c6 = {i: {(i - 1) % 6, (i + 1) % 6} for i in range(6)}
    assert not check_chordal_bipartite(c6)
    c6_chord = {i: set(nb) for i, nb in c6.items()}
    c6_chord[0].add(3)
    c6_chord[3].add(0)
    assert check_chordal_bipartite(c6_chord)
    c8 = {i: {(i - 1) % 8, (i + 1) % 8} for i in range(8)}
    assert not check_chordal_bipartite(c8)


def test_chordal_checker_cap():
    g = pixelate(comb(40))
    with pytest.raises(TooLarge):
        check_chordal_bipartite(adjacency_of(g))


def test_comb_teeth_do_not_see_each_other():
    d = comb(2)
    g = pixelate(d)
    teeth = [(h, v) for h, v in g.edges() if g.hslices[h].rect.ymin < 0]
    assert len(teeth) == 2
    assert not edges_r_visible(g, *teeth)
    assert centroid_vision_agrees(d, g, *teeth)


def test_dumps(l_domain):
    g = pixelate(l_domain)
    assert g.dump() == "h 0\nh 1\nv 0 0 1\nv 1 0 0\n"
    assert g.dump_edges() == "0 0\n0 1\n1 0\n"


# ---------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.integers(0, 100_000))
def test_graph_structure(half, seed):
    d = random_domain(2 * half, seed)
    g = pixelate(d)
    edges = set(g.edges())
    assert edges == brute_force_edges(g.hslices, g.vslices)
    assert g.m == len(edges)
    assert all(edge_exists(g, h, v) == ((h, v) in edges) for h in range(g.n_h) for v in range(g.n_v))
    graph = nx.Graph((("h", h), ("v", v)) for h, v in edges)
    assert nx.is_connected(graph)
    # every neighbourhood is a path of the other orientation's tree
    for v in range(g.n_v):
        nb = g.neighbors_of_v(v)
        assert set(nb) == {h for h, w in edges if w == v}
        assert all(b in g.t_h.adjacency[a] for a, b in zip(nb, nb[1:]))
    for h in range(g.n_h):
        nb = g.neighbors_of_h(h)
        assert set(nb) == {v for w, v in edges if w == h}
        assert all(b in g.t_v.adjacency[a] for a, b in zip(nb, nb[1:]))
    if g.m <= 64:
        assert check_chordal_bipartite(adjacency_of(g))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.integers(0, 100_000))
def test_centroid_vision_agrees_everywhere(half, seed):
    d = random_domain(2 * half, seed)
    g = pixelate(d)
    edges = sorted(g.edges())
    if len(edges) > 64:
        return
    for e1 in edges:
        for e2 in edges:
            assert centroid_vision_agrees(d, g, e1, e2)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(0, 100_000), st.data())
def test_vision_agrees_at_any_interior_points(half, seed, data):
    from rguard.geometry import Point
    d = random_domain(2 * half, seed)
    g = pixelate(d)
    edges = sorted(g.edges())
    e1 = data.draw(st.sampled_from(edges))
    e2 = data.draw(st.sampled_from(edges))

    def inside(e):
        r = g.pixel(e).rect
        return Point(data.draw(st.integers(r.xmin + 1, r.xmax - 1)), data.draw(st.integers(r.ymin + 1, r.ymax - 1)))

    assert centroid_vision_agrees(d, g, e1, e2, inside(e1), inside(e2))
