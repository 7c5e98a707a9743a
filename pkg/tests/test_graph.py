from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from gf2cycles import graph as gr
from gf2cycles.graph import GraphError
from strategies import connected_graphs, graphs


def to_nx(g: gr.Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.V))
    h.add_edges_from(g.edges)
    return h


def test_canonical_edge_order():
    g = gr.Graph(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges == ((0, 1), (0, 2), (2, 3))
    assert g.index(2, 0) == 1 == g.index(0, 2)


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 5)], [(0, 1), (1, 0)]])
def test_rejects_bad_edges(bad):
    with pytest.raises(GraphError):
        gr.Graph(3, bad)


@pytest.mark.parametrize("build,v,e", [
    (lambda: gr.complete(5), 5, 10),
    (lambda: gr.complete_bipartite(2, 3), 5, 6),
    (lambda: gr.cycle(6), 6, 6),
    (lambda: gr.path(4), 4, 3),
    (lambda: gr.wheel(5), 6, 10),
    (gr.triod, 4, 3),
    (lambda: gr.tilde_complete(4), 8, 12),
])
def test_family_sizes(build, v, e):
    g = build()
    assert (g.V, g.E) == (v, e)


def test_tilde_k3_is_hexagon():
    h = to_nx(gr.tilde_complete(3))
    assert nx.is_isomorphic(h, nx.cycle_graph(6))


def test_tilde_is_bipartite_minus_matching():
    for n in (3, 4, 5):
        g = gr.tilde_complete(n)
        assert all(u < n <= v and v - u != n for u, v in g.edges)


def test_family_isomorphisms():
    assert nx.is_isomorphic(to_nx(gr.wheel(5)), nx.wheel_graph(6))
    assert nx.is_isomorphic(to_nx(gr.complete_bipartite(3, 3)),
                            nx.complete_bipartite_graph(3, 3))


def test_walk_and_labels():
    g = gr.tilde_complete(3)
    c = g.walk("1", "2'", "3", "1'", "2", "3'")
    assert len(c) == 6
    assert gr.complete(3).walk(0, 1, 2).labels() == ["12", "13", "23"]
    with pytest.raises(GraphError):
        gr.complete_bipartite(2, 2).walk(0, 1)


def test_make_standard():
    assert gr.make_standard("wheel", 4) == gr.wheel(4)
    with pytest.raises(GraphError):
        gr.make_standard("petersen")


@given(graphs())
def test_components_match_networkx(g):
    n, comp = gr.components(g)
    assert n == nx.number_connected_components(to_nx(g))
    for u, v in g.edges:
        assert comp[u] == comp[v]


@given(graphs())
def test_spanning_forest(g):
    f = gr.spanning_forest(g)
    tree = f.tree
    n, _ = gr.components(g)
    assert len(tree) == g.V - n
    assert nx.is_forest(to_nx(g).edge_subgraph(tree.pairs()).copy()) if len(tree) else True
    assert len(f.cotree_edges) == g.E - g.V + n


@given(connected_graphs())
def test_fundamental_cycles_are_simple(g):
    from gf2cycles.cycles import is_simple_cycle
    f = gr.spanning_forest(g)
    for e in f.cotree_edges:
        c = gr.fundamental_cycle(f, e)
        assert e in c and is_simple_cycle(c)
        assert sum(1 for i in c if not f.is_tree_edge(i)) == 1


def test_fundamental_cycle_of_tree_edge_rejected():
    g = gr.complete(3)
    f = gr.spanning_forest(g)
    tree_edge = next(iter(f.tree))
    with pytest.raises(GraphError):
        gr.fundamental_cycle(f, tree_edge)


def test_involutions():
    g = gr.tilde_complete(4)
    t = gr.Involution.part_swap(g)
    c = g.walk("1", "2'", "3", "1'", "2", "3'")
    assert t(t(c)) == c
    with pytest.raises(GraphError):
        gr.Involution(gr.path(3), [1, 0, 2])  # sends edge 12 to the non-edge 02
    with pytest.raises(GraphError):
        gr.Involution(gr.cycle(3), [1, 2, 0])  # order three


def test_edge_list_roundtrip(tmp_path):
    g = gr.wheel(4)
    p = tmp_path / "w.txt"
    p.write_text(gr.format_edge_list(g))
    assert gr.read_edge_list(p) == g
    assert gr.parse_edge_list("# comment\nV 3\n0 1  # edge\n1 2\n") == gr.path(3)


@pytest.mark.parametrize("text", ["", "3\n0 1", "V 2\n0 1 2", "V x", "V 2\n0 2"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        gr.parse_edge_list(text)


def test_random_connected_graph_bounds():
    import random
    rng = random.Random(3)
    g = gr.random_connected_graph(rng, 6, 9)
    assert (g.V, g.E) == (6, 9) and gr.components(g)[0] == 1
    with pytest.raises(GraphError):
        gr.random_connected_graph(rng, 4, 7)
