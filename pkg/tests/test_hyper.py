from __future__ import annotations

import itertools
import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf2cycles import cycles as cy
from gf2cycles import graph as gr
from gf2cycles import hyper as hy
from gf2cycles.gf2 import BitVector, kernel_basis


@st.composite
def face_cycles(draw, n):
    """Random 2-cycle on [n] as a random sum of tetrahedra."""
    tets = draw(st.lists(st.sampled_from(list(itertools.combinations(range(n), 4))), max_size=6))
    return hy.chain(f for t in tets for f in itertools.combinations(t, 3))


@st.composite
def rook_cycles(draw, grid):
    ker = kernel_basis(grid.line_incidence)
    bits = draw(st.lists(st.integers(0, 1), min_size=ker.nrows, max_size=ker.nrows))
    v = ker.combine(BitVector.from_bits(bits)) if ker.nrows else BitVector.zeros(grid.size)
    return frozenset(grid.cell(k) for k in v)


# ---- simplicial chains ----

def test_chain_cancels_pairs():
    assert hy.chain([(2, 1, 0), (0, 1, 2), (1, 2, 3)]) == {(1, 2, 3)}


def test_boundary_of_boundary_is_empty():
    for s in itertools.combinations(range(6), 4):
        assert not hy.boundary(hy.boundary([s]))


@pytest.mark.parametrize("a", list(itertools.combinations(range(6), 5)))
def test_pentachoron_identity(a):
    assert not hy.pentachoron_relation(a)


def test_tetrahedron_is_two_cycle():
    h = hy.complete_hypergraph(5)
    assert hy.is_2cycle(hy.tetrahedron(h, (0, 1, 2, 4)))
    with pytest.raises(hy.HypergraphError):
        hy.tetrahedron(h, (0, 1, 2))


@given(st.integers(4, 7), st.data())
def test_decompose_tetrahedra_resums(n, data):
    c = data.draw(face_cycles(n))
    h = hy.complete_hypergraph(n)
    fs = h.face_set(c)
    tets = hy.decompose_tetrahedra(fs)
    assert all(n - 1 in t for t in tets)
    assert hy.boundary(tets) == c


@given(st.integers(5, 7), st.data())
def test_decompose_relation_resums(n, data):
    fives = data.draw(st.lists(st.sampled_from(list(itertools.combinations(range(n), 5))), max_size=5))
    r = hy.chain(t for a in fives for t in itertools.combinations(a, 4))
    out = hy.decompose_relation(r, n)
    assert hy.boundary(out) == r


@pytest.mark.parametrize("d", [1, 2, 3])
def test_d_cycle_decompose_small_d(d):
    rng = random.Random(d)
    n = d + 4
    for _ in range(20):
        big = [tuple(rng.sample(range(n), d + 2)) for _ in range(3)]
        c = hy.boundary(hy.chain(big))
        assert hy.boundary(hy.d_cycle_decompose(c, d, n)) == c


def test_d_cycle_errors():
    with pytest.raises(hy.NotACycleError):
        hy.d_cycle_decompose([(0, 1, 2)], 2, 4)
    with pytest.raises(hy.HypergraphError):
        hy.d_cycle_decompose([(0, 1, 9)], 2, 4)
    with pytest.raises(hy.HypergraphError):
        hy.is_d_cycle([(0, 1)], 2)


@given(st.integers(4, 7), st.data())
def test_sum_of_two_cycles(n, data):
    a, b = data.draw(face_cycles(n)), data.draw(face_cycles(n))
    assert hy.is_d_cycle(a ^ b, 2)


@pytest.mark.parametrize("n", range(4, 8))
def test_count_2cycles(n):
    res = hy.count_2cycles(n)
    assert res.dimension == res.kernel_rank == comb(n - 1, 3)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cycles_through_top_vertex_vanish(n):
    # restrict the kernel to faces containing n-1: only the empty 2-cycle
    h = hy.Hypergraph2(n, [f for f in itertools.combinations(range(n), 3) if n - 1 in f])
    assert hy.two_cycle_basis(h).nrows == 0


# ---- hypergraphs and Betti numbers ----

def test_hypergraph_validation():
    for bad in ([(0, 1)], [(0, 0, 1)], [(0, 1, 5)], [(0, 1, 2), (2, 1, 0)]):
        with pytest.raises(hy.HypergraphError):
            hy.Hypergraph2(4, bad)


def test_torus_profile():
    p = hy.betti_profile(hy.torus7())
    assert p.as_tuple() == (1, 2, 1, 7, 21, 14)
    assert p.V - p.E + p.F == 0 and p.euler_holds


@given(st.integers(3, 8), st.integers(0, 20), st.integers(0, 2**31))
def test_euler_identity(v, f, seed):
    h = hy.random_hypergraph(random.Random(seed), v, f)
    assert hy.betti_profile(h).euler_holds


def test_single_face_profile():
    p = hy.betti_profile(hy.Hypergraph2(4, [(0, 1, 2)]))
    assert p.as_tuple() == (2, 0, 0, 4, 3, 1)


def test_witness_pair():
    w = hy.find_witness_pair()
    assert w is not None
    assert hy.is_witness_pair(w.first, w.second)
    assert w.first_profile.b2 != w.second_profile.b2


def test_witness_rejections():
    t = hy.torus7()
    assert not hy.is_witness_pair(t, t)
    split = hy.Hypergraph2(6, [(0, 1, 2), (3, 4, 5)])
    assert not hy.is_witness_pair(split, split)
    assert hy.find_witness_pair(max_vertices=4, max_candidates=3) is None


def test_hypergraph_text_roundtrip(tmp_path):
    t = hy.torus7()
    p = tmp_path / "t.txt"
    p.write_text(hy.format_hypergraph(t))
    back = hy.read_hypergraph(p)
    assert back.faces == t.faces and back.V == 7
    for bad in ("", "V x", "V 3\n0 1", "V 3\n0 1 a"):
        with pytest.raises(hy.HypergraphError):
            hy.parse_hypergraph(bad)


# ---- rook cycles ----

@pytest.mark.parametrize("n,ell", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_rook_dimension(n, ell):
    assert hy.rook_cycle_dimension(hy.RookGrid(n, ell)) == (n - 1) ** ell


def test_grid_indexing():
    g = hy.RookGrid(3, 3)
    assert all(g.cell(g.index(c)) == c for c in g.cells())
    with pytest.raises(hy.HypergraphError):
        g.index((0, 3, 0))


@pytest.mark.parametrize("n,ell", [(3, 2), (2, 3), (3, 3)])
def test_rook_decomposition(n, ell):
    grid = hy.RookGrid(n, ell)

    @given(rook_cycles(grid))
    def check(s):
        base = hy.decompose_parallelepipeds(s, grid)
        assert hy.box_sum([grid.apex_box(a) for a in base], grid) == s
        assert all(n - 1 not in a for a in base)

    check()


def test_parallelepipeds_are_rook_cycles():
    grid = hy.RookGrid(4, 3)
    box = ((0, 2), (1, 3), (0, 1))
    assert hy.is_rook_cycle(grid.parallelepiped(box), grid)
    assert not hy.is_rook_cycle({(0, 0, 0)}, grid)


def test_rook_cycle_avoiding_small_grid_is_empty():
    # cells avoiding [n-1]^ell all touch the top value; no nonempty rook cycle fits
    grid = hy.RookGrid(3, 2)
    keep = [grid.index(c) for c in grid.cells() if 2 in c]
    sub = grid.line_incidence.select_columns(keep)
    assert kernel_basis(sub).nrows == 0


def test_box_relation_single():
    grid = hy.RookGrid(3, 2)
    rel = hy.BoxRelation(((0, 1),), 1, (0, 1, 2))
    assert not hy.box_sum(rel.boxes(), grid)
    assert hy.decompose_parallelepiped_relation(rel.boxes(), grid) == [rel]


@given(st.data())
def test_relation_reduction(data):
    grid = hy.RookGrid(4, 2)
    pairs = list(itertools.combinations(range(4), 2))
    rels = []
    for _ in range(data.draw(st.integers(1, 4))):
        axis = data.draw(st.integers(0, 1))
        rest = (data.draw(st.sampled_from(pairs)),)
        triple = tuple(sorted(data.draw(st.lists(st.integers(0, 3), min_size=3, max_size=3, unique=True))))
        rels.append(hy.BoxRelation(rest, axis, triple))
    family: set = set()
    for r in rels:
        family ^= set(r.boxes())
    steps = hy.decompose_parallelepiped_relation(family, grid)
    rebuilt: set = set()
    for r in steps:
        rebuilt ^= set(r.boxes())
    assert rebuilt == family


def test_relation_rejects_nonzero_family():
    grid = hy.RookGrid(3, 2)
    with pytest.raises(hy.NotACycleError):
        hy.decompose_parallelepiped_relation([((0, 1), (0, 1))], grid)


@pytest.mark.parametrize("n", [3, 4])
def test_rook_dictionary(n):
    g = gr.complete_bipartite(n, n)
    grid = hy.RookGrid(n, 2)
    for c in cy.cycle_space(g).cycles():
        s = hy.knn_edges_to_rook(c)
        assert hy.is_rook_cycle(s, grid)
        assert hy.rook_to_knn_edges(s, n) == c
    sq = g.walk(0, n + 1, 2, n + 2)
    s = hy.knn_edges_to_rook(sq)
    assert s == grid.parallelepiped(((0, 2), (1, 2)))
