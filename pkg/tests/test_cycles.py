from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf2cycles import cycles as cy
from gf2cycles import graph as gr
from gf2cycles.gf2 import BitMatrix, in_span, rank
from strategies import connected_graphs, graphs, one_cycles


def brute_force_cycle_count(g: gr.Graph) -> int:
    return sum(1 for mask in range(1 << g.E)
               if cy.is_one_cycle(g.edge_set([i for i in range(g.E) if mask >> i & 1])))


@pytest.mark.parametrize("n", range(3, 8))
def test_complete_graph_exponent(n):
    assert cy.cycle_space(gr.complete(n)).dimension == (n - 1) * (n - 2) // 2


@pytest.mark.parametrize("n", range(2, 6))
def test_complete_bipartite_exponent(n):
    assert cy.cycle_space(gr.complete_bipartite(n, n)).dimension == (n - 1) ** 2


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_trees_have_only_empty_cycle(v, seed):
    g = gr.random_tree(random.Random(seed), v)
    assert cy.cycle_space(g).count == 1


@given(graphs(max_vertices=6))
def test_count_matches_brute_force(g):
    if g.E > 12:
        return
    n, _ = gr.components(g)
    space = cy.cycle_space(g)
    assert space.dimension == g.E - g.V + n
    assert space.count == brute_force_cycle_count(g)


@given(graphs(max_vertices=7))
def test_dimension_matches_networkx_cycle_basis(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.V))
    h.add_edges_from(g.edges)
    assert cy.cycle_space(g).dimension == len(nx.cycle_basis(h))


@given(st.data())
def test_sum_of_cycles_is_cycle(data):
    g = data.draw(connected_graphs())
    a, b = data.draw(one_cycles(g)), data.draw(one_cycles(g))
    assert cy.is_one_cycle(a + b)


@given(st.data())
def test_coordinates_recombine(data):
    g = data.draw(connected_graphs())
    c = data.draw(one_cycles(g))
    space = cy.cycle_space(g)
    assert space.combine(space.coordinates(c)) == c


def test_coordinates_reject_non_cycle():
    g = gr.complete(4)
    with pytest.raises(cy.NotACycleError):
        cy.coordinates(g.edge_set([0]))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cycles_through_last_vertex_only_are_empty(n):
    g = gr.complete(n)
    star = [i for i, e in enumerate(g.edges) if n - 1 in e]
    # the 1-cycles supported on the star of the last vertex: only the empty set
    sub = g.incidence.select_columns(star)
    from gf2cycles.gf2 import nullity
    assert nullity(sub) == 0


def test_tetrahedron_relation():
    g = gr.complete(6)
    for a, b, c, d in itertools.combinations(range(6), 4):
        total = g.walk(a, b, c) + g.walk(a, b, d) + g.walk(a, c, d) + g.walk(b, c, d)
        assert not total


# ---- decompositions ----

@given(st.data())
def test_decompose_simple_resums(data):
    g = data.draw(connected_graphs())
    c = data.draw(one_cycles(g))
    parts = cy.decompose_simple(c)
    assert all(cy.is_simple_cycle(p) for p in parts)
    assert gr.edge_sum(parts, g) == c
    assert sum(len(p) for p in parts) == len(c)  # edge-disjoint


@given(st.data())
def test_decompose_chordless_resums(data):
    g = data.draw(connected_graphs(max_vertices=6))
    c = data.draw(one_cycles(g))
    parts = cy.decompose_chordless(c)
    assert gr.edge_sum(parts, g) == c
    assert all(not cy.chords(g, p) for p in parts)


@given(st.integers(4, 7), st.data())
def test_triangle_decomposition(n, data):
    g = gr.complete(n)
    c = data.draw(one_cycles(g))
    tris = cy.decompose_triangles_complete(c)
    assert gr.edge_sum([g.walk(*t) for t in tris], g) == c
    assert all(t[2] == n - 1 for t in tris)


@given(st.integers(2, 5), st.data())
def test_square_decomposition(n, data):
    g = gr.complete_bipartite(n, n)
    c = data.draw(one_cycles(g))
    sq = cy.decompose_squares_bipartite(c)
    assert gr.edge_sum([g.walk(*q) for q in sq], g) == c


@pytest.mark.parametrize("n", [4, 5, 6])
def test_tilde_cycles_split_into_squares(n):
    g = gr.tilde_complete(n)
    for c in cy.cycle_space(g).cycles():
        chordless = cy.decompose_chordless(c)
        assert {len(p) for p in chordless} <= {4, 6}
        squares = cy.decompose_tilde_squares(c)
        assert all(len(p) == 4 and cy.is_simple_cycle(p) for p in squares)
        assert gr.edge_sum(squares, g) == c


def test_tilde_squares_rejects_small_or_other_graphs():
    with pytest.raises(gr.GraphError):
        cy.decompose_tilde_squares(gr.tilde_complete(3).all_edges())
    with pytest.raises(gr.GraphError):
        cy.decompose_tilde_squares(gr.complete(4).empty())


@pytest.mark.parametrize("n", [4, 5, 6])
def test_triangle_not_in_span_of_four_cycles(n):
    g = gr.complete(n)
    squares = [g.walk(*q) for q in itertools.permutations(range(n), 4) if q[0] == min(q)]
    m = BitMatrix.from_rows([s.members for s in squares], g.E)
    assert not in_span(m, g.walk(0, 1, 2).members)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tilde_base_is_basis(n):
    base = cy.tilde_base(n)
    g = gr.tilde_complete(n)
    assert len(base) == cy.cycle_space(g).dimension
    assert rank(BitMatrix.from_rows([c.members for _, c in base], g.E)) == len(base)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_symmetric_cycles_of_tilde_match_complete(n):
    g = gr.tilde_complete(n)
    _, dim = cy.symmetric_cycle_space(g, gr.Involution.part_swap(g))
    assert dim == cy.cycle_space(gr.complete(n)).dimension


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tilde_symmetric_base(n):
    sb = cy.tilde_symmetric_base(n)
    g = sb.fixed.graph
    t = gr.Involution.part_swap(g)
    assert t(sb.fixed) == sb.fixed
    assert all(t(a) == b for a, b in sb.pairs)
    els = sb.elements()
    assert rank(BitMatrix.from_rows([c.members for c in els], g.E)) == len(els)


# ---- signs and integer cycles ----

@pytest.mark.parametrize("g", [gr.cycle(3), gr.complete(4), gr.wheel(4),
                               gr.complete_bipartite(2, 3), gr.path(4)])
def test_sign_classes(g):
    expected = 2 ** (g.E - g.V + 1)
    assert cy.sign_class_count_bruteforce(g) == expected
    forms = {cy.sign_canonical_form(s).signs for s in cy.all_sign_assignments(g)}
    assert len(forms) == expected


@given(connected_graphs(max_vertices=6), st.data())
def test_canonical_form_is_orbit_invariant(g, data):
    if g.E == 0:
        return
    signs = tuple(data.draw(st.lists(st.sampled_from([1, -1]), min_size=g.E, max_size=g.E)))
    s = cy.SignAssignment(g, signs)
    flipped = s
    for v in data.draw(st.lists(st.integers(0, g.V - 1), max_size=6)):
        flipped = flipped.flip(v)
    canon = cy.sign_canonical_form(s)
    assert canon == cy.sign_canonical_form(flipped)
    f = gr.spanning_forest(g)
    assert all(canon.signs[e] == 1 for e in f.tree)


def test_tree_signs_all_equivalent():
    g = gr.triod()
    for s in cy.all_sign_assignments(g):
        assert cy.sign_canonical_form(s).signs == (1,) * g.E


def test_sign_form_rejects_disconnected():
    g = gr.disjoint_union(gr.path(2), gr.path(2))
    with pytest.raises(gr.GraphError):
        cy.sign_canonical_form(cy.SignAssignment(g, (1, 1)))


@given(connected_graphs(max_vertices=7), st.data())
def test_integer_extension(g, data):
    og = cy.OrientedGraph(g, [data.draw(st.sampled_from(e)) for e in g.edges])
    f = gr.spanning_forest(g)
    weights = {e: data.draw(st.integers(-5, 5)) for e in f.cotree_edges}
    z = cy.integer_extend(og, f, weights)
    assert cy.is_integer_cycle(og, z)
    assert all(z.weights[e] == w for e, w in weights.items())
    # any change on a tree edge alone breaks the Kirchhoff rule
    for e in f.tree:
        bumped = list(z.weights)
        bumped[e] += 1
        assert not cy.is_integer_cycle(og, cy.IntegerChain(g, tuple(bumped)))


def test_integer_extension_errors():
    g = gr.complete(3)
    og = cy.OrientedGraph(g)
    f = gr.spanning_forest(g)
    with pytest.raises(gr.GraphError):
        cy.integer_extend(og, f, {next(iter(f.tree)): 1})
    h = gr.disjoint_union(gr.complete(3), gr.complete(3))
    with pytest.raises(gr.GraphError):
        cy.integer_extend(cy.OrientedGraph(h), gr.spanning_forest(h), {})


@given(connected_graphs(max_vertices=6), st.data())
def test_reorientation(g, data):
    og1 = cy.OrientedGraph(g)
    og2 = og1.flipped(data.draw(st.lists(st.integers(0, max(g.E - 1, 0)), max_size=g.E))
                      if g.E else [])
    f = gr.spanning_forest(g)
    z1 = cy.integer_extend(og1, f, {e: data.draw(st.integers(-3, 3)) for e in f.cotree_edges})
    z2 = cy.integer_extend(og1, f, {e: data.draw(st.integers(-3, 3)) for e in f.cotree_edges})
    img = cy.reorientation_iso(og1, og2, z1)
    assert cy.is_integer_cycle(og2, img)
    assert cy.reorientation_iso(og2, og1, img) == z1
    assert cy.reorientation_iso(og1, og2, z1 + z2) == img + cy.reorientation_iso(og1, og2, z2)
