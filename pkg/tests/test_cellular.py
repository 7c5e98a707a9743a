from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf2cycles import cellular as cel
from gf2cycles import cycles as cy
from gf2cycles import graph as gr
from gf2cycles import products as pr
from gf2cycles.gf2 import BitMatrix, BitVector, rank
from strategies import connected_graphs, one_cycles


def brute_force_two_cycles(cx: pr.CellComplex) -> int:
    n = len(cx)
    return sum(1 for mask in range(1 << n)
               if cel.is_cellular_2cycle_by_counting(
                   cx.cell_set([k for k in range(n) if mask >> k & 1])))


@st.composite
def two_cycles(draw, cx):
    ker = cel.two_cycle_kernel(cx)
    bits = draw(st.lists(st.integers(0, 1), min_size=ker.nrows, max_size=ker.nrows))
    return pr.CellSet(cx, ker.combine(BitVector.from_bits(bits)) if ker.nrows
                      else BitVector.zeros(len(cx)))


@pytest.mark.parametrize("g,dim", [
    (gr.complete(3), 1), (gr.complete_bipartite(2, 2), 1),
    (gr.complete_bipartite(2, 3), 4), (gr.complete(4), 9)])
def test_two_cycle_counts(g, dim):
    assert cel.two_cycle_kernel(pr.CellComplex(g)).nrows == dim
    assert cel.two_cycle_space(g).dimension == dim


@pytest.mark.parametrize("g", [gr.complete(3), gr.complete_bipartite(2, 2), gr.path(4),
                               gr.triod(), gr.cycle(4)])
def test_count_matches_cell_subset_enumeration(g):
    cx = pr.CellComplex(g)
    assert len(cx) <= 16
    assert brute_force_two_cycles(cx) == 2 ** cel.two_cycle_kernel(cx).nrows


def test_disconnected_formula():
    g = gr.disjoint_union(gr.complete(3), gr.cycle(4), gr.path(2))
    n, _ = gr.components(g)
    assert cel.two_cycle_kernel(pr.CellComplex(g)).nrows == (g.E - g.V + n) ** 2


@given(st.data())
def test_three_predicates_agree(data):
    g = data.draw(connected_graphs(max_vertices=4))
    cx = pr.CellComplex(g)
    if not len(cx):
        return
    bits = data.draw(st.lists(st.integers(0, 1), min_size=len(cx), max_size=len(cx)))
    c = pr.CellSet(cx, BitVector.from_bits(bits))
    a = cel.is_cellular_2cycle(c)
    assert a == cel.is_cellular_2cycle_by_counting(c) == (not cel.boundary_sum(c))


@given(st.data())
def test_sum_of_two_cycles(data):
    g = data.draw(connected_graphs(max_vertices=5))
    cx = pr.CellComplex(g)
    a, b = data.draw(two_cycles(cx)), data.draw(two_cycles(cx))
    assert cel.is_cellular_2cycle(a + b)


@given(st.data())
def test_sections_of_two_cycles_are_cycles(data):
    g = data.draw(connected_graphs(max_vertices=5))
    cx = pr.CellComplex(g)
    c = data.draw(two_cycles(cx))
    for s in range(g.E):
        assert cy.is_one_cycle(cel.column_section(c, s))
        assert cy.is_one_cycle(cel.row_section(c, s))


@given(st.data())
def test_torus_of_cycles_is_two_cycle(data):
    g = data.draw(connected_graphs(max_vertices=5))
    a, b = data.draw(one_cycles(g)), data.draw(one_cycles(g))
    t = cel.torus(a, b)
    assert cel.is_cellular_2cycle(t) and len(t) == len(a) * len(b)


def test_torus_rejects_non_cycles():
    g = gr.complete(3)
    with pytest.raises(cy.NotACycleError):
        cel.torus(g.edge_set([0]), g.all_edges())


@given(st.data())
def test_torus_decomposition_resums(data):
    g = data.draw(connected_graphs(max_vertices=5))
    cx = pr.CellComplex(g)
    c = data.draw(two_cycles(cx))
    dec = cel.decompose_into_tori(c)
    assert dec.resum(cx) == c


def test_decompose_rejects_non_cycle():
    cx = pr.CellComplex(gr.complete(3))
    with pytest.raises(cel.NotATwoCycleError):
        cel.decompose_into_tori(cx.cell_set([0]))


@pytest.mark.parametrize("g", [gr.path(4), gr.triod(), gr.random_tree(__import__("random").Random(2), 6)])
def test_trees_carry_no_two_cycles(g):
    assert cel.two_cycle_kernel(pr.CellComplex(g)).nrows == 0


@pytest.mark.parametrize("g", [gr.complete(4), gr.wheel(4), gr.complete_bipartite(2, 3)])
def test_tree_region_carries_no_two_cycles(g):
    cx = pr.CellComplex(g)
    assert cel.two_cycles_within(cx, cel.tree_region_cells(g)).nrows == 0


def test_kunneth_with_second_basis():
    g = gr.complete(4)
    cs = cy.cycle_space(g).cycles()
    other = [cs[0], cs[0] + cs[1], cs[1] + cs[2]]
    sp = cel.two_cycle_space(g, other)
    assert sp.dimension == 9
    assert all(cel.is_cellular_2cycle(pr.CellSet(sp.complex, row)) for row in sp.basis)
    # same span as the raw kernel
    assert rank(sp.basis.vstack(cel.two_cycle_kernel(sp.complex))) == 9
    with pytest.raises(ValueError):
        cel.two_cycle_space(g, [cs[0], cs[0], cs[1]])


@pytest.mark.parametrize("g", [gr.complete(2), gr.complete(3), gr.complete_bipartite(3, 1)])
def test_small_deleted_complexes_are_empty(g):
    assert len(pr.CellComplex(g, deleted=True)) == 0


@pytest.mark.parametrize("g", [gr.cycle(4), gr.cycle(5), gr.cycle(6), gr.wheel(4), gr.wheel(5)])
def test_cycles_and_wheels_have_no_deleted_two_cycles(g):
    assert cel.two_cycle_kernel(pr.CellComplex(g, deleted=True)).nrows == 0


@pytest.mark.parametrize("g", [gr.complete_bipartite(3, 3), gr.complete(5)])
def test_whole_deleted_complex_is_two_cycle(g):
    cx = pr.CellComplex(g, deleted=True)
    assert cel.is_cellular_2cycle(cx.all_cells())


def test_deleted_k5_outside_disjoint_torus_span():
    g = gr.complete(5)
    cx = pr.CellComplex(g, deleted=True)
    span = cel.vertex_disjoint_torus_span(g)
    target = cx.to_full(cx.all_cells()).members
    from gf2cycles.gf2 import in_span
    assert not span.nrows or not in_span(span, target)


@pytest.mark.parametrize("n,dim", [(3, 1), (4, 25)])
def test_deleted_knn_dimension(n, dim):
    assert cel.deleted_knn_dimension(n) == (n * n - 3 * n + 1) ** 2 == dim


def test_correspondence_n3():
    f = pr.knn_tilde_correspondence(3)
    assert f.is_bijective() and f.preserves_adjacency() and f.commutes_with_swap()
    ker = cel.two_cycle_kernel(f.source)
    images = [f(pr.CellSet(f.source, row)) for row in ker]
    assert all(cel.is_cellular_2cycle(c) for c in images)
    assert rank(BitMatrix.from_rows([c.members for c in images], len(f.target))) == ker.nrows


def test_simple_cycles_against_networkx():
    import networkx as nx
    for g in (gr.complete(5), gr.wheel(5), gr.complete_bipartite(3, 3)):
        h = nx.Graph(list(g.edges))
        ours = cel.simple_cycles(g)
        assert all(cy.is_simple_cycle(c) for c in ours)
        assert len(ours) == len(set(ours)) == sum(1 for _ in nx.simple_cycles(h))


def test_simple_cycle_cap():
    with pytest.raises(cel.EnumerationLimitError):
        cel.simple_cycles(gr.complete(6), max_cycles=10)


def test_refutation():
    rep = cel.refute_one_extra_generator()
    assert rep.two_cycle_dimension == 144
    assert rep.codimension >= 2 and rep.refuted


def test_k3_square_not_symmetrized_tori():
    cx = pr.CellComplex(gr.complete(3))
    assert cel.decompose_symmetrized_tori(cx.all_cells()) is None


@pytest.mark.parametrize("g", [gr.complete(4), gr.complete(5), gr.complete_bipartite(3, 3)])
def test_deleted_symmetric_cycles_decompose(g):
    cx = pr.CellComplex(g, deleted=True)
    sym = cel.symmetric_two_cycles(cx)
    assert sym.all_decomposable
    for row in sym.basis:
        c = pr.CellSet(cx, row)
        pairs = cel.decompose_symmetrized_tori(c)
        assert pairs is not None


def test_symmetric_profile_depends_on_v_e_only():
    import random
    rng = random.Random(11)
    for v, e in [(4, 5), (5, 6), (5, 7)]:
        a = gr.random_connected_graph(rng, v, e)
        b = gr.random_connected_graph(rng, v, e)
        assert cel.symmetric_dimension_profile(a) == cel.symmetric_dimension_profile(b)


@pytest.mark.parametrize("n", [3, 4])
def test_knn_symmetric_generators(n):
    rep = cel.knn_symmetric_generators(n)
    assert rep.deleted_side.inside
    assert rep.transport_ok
    assert rep.deleted_side.spans
    with pytest.raises(ValueError):
        cel.knn_symmetric_generators(6)
