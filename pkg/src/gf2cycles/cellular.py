"""Cellular 2-cycles in ``K × K`` and in the deleted product of ``K``.

A cell set is a 2-cycle when every edge of the product graph lies in an even
number of its cells.  Three routes decide this and are kept independent:
row/column sections, raw edge counting, and the boundary sum.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .cycles import NotACycleError, cycle_space, is_one_cycle
from .gf2 import BitMatrix, BitVector, kernel_basis, rank, solve_in_span
from .graph import (
    EdgeSet,
    Graph,
    GraphError,
    Involution,
    complete,
    complete_bipartite,
    spanning_forest,
)
from .products import CellComplex, CellCorrespondence, CellSet


class NotATwoCycleError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    pass


# predicates -----------------------------------------------------------------


def column_section(c: CellSet, sigma: int) -> EdgeSet:
    """``{τ : (σ, τ) ∈ c}`` as an edge set of the base graph."""
    k = c.complex.base
    return k.edge_set([t for s, t in c.cells() if s == sigma])


def row_section(c: CellSet, sigma: int) -> EdgeSet:
    k = c.complex.base
    return k.edge_set([s for s, t in c.cells() if t == sigma])


def is_cellular_2cycle(c: CellSet) -> bool:
    """Every row and column section is a 1-cycle of the base graph."""
    k = c.complex.base
    cols: dict[int, list[int]] = {}
    rows: dict[int, list[int]] = {}
    for s, t in c.cells():
        cols.setdefault(s, []).append(t)
        rows.setdefault(t, []).append(s)
    return all(is_one_cycle(k.edge_set(v)) for v in cols.values()) and \
        all(is_one_cycle(k.edge_set(v)) for v in rows.values())


def is_cellular_2cycle_by_counting(c: CellSet) -> bool:
    """Raw definition: each product edge ``(a, τ)`` or ``(σ, u)`` is covered evenly."""
    k = c.complex.base
    cover: Counter = Counter()
    for s, t in c.cells():
        for a in k.edges[s]:
            cover[("v", a, t)] += 1
        for u in k.edges[t]:
            cover[("e", s, u)] += 1
    return all(m % 2 == 0 for m in cover.values())


def boundary_sum(c: CellSet) -> EdgeSet:
    """Sum of the cell boundaries, an edge set of the complex's product graph."""
    cx = c.complex
    return cx.square.graph.edge_set(BitMatrix.combine(cx.boundary_matrix, c.members).indices())


def _require_2cycle(c: CellSet) -> None:
    if not is_cellular_2cycle(c):
        raise NotATwoCycleError("cell set is not a cellular 2-cycle")


# tori and the 2-cycle space -------------------------------------------------


def torus(c1: EdgeSet, c2: EdgeSet, complex: CellComplex | None = None) -> CellSet:
    """All cells ``(σ, τ)`` with ``σ ∈ c1`` and ``τ ∈ c2``."""
    if c1.graph is not c2.graph:
        raise GraphError("tori need two edge sets of the same graph")
    for c in (c1, c2):
        if not is_one_cycle(c):
            raise NotACycleError("torus factor is not a 1-cycle")
    cx = complex if complex is not None else CellComplex(c1.graph)
    return cx.cell_set([(s, t) for s in c1 for t in c2])


def two_cycle_kernel(cx: CellComplex) -> BitMatrix:
    """Basis of the cellular 2-cycles supported on the cells of ``cx``."""
    return kernel_basis(cx.boundary_matrix.transpose())


def two_cycles_within(cx: CellComplex, cells: list[tuple[int, int]]) -> BitMatrix:
    """Basis of the 2-cycles of ``cx`` supported on the given cells."""
    idx = [cx.cell_index[c] for c in cells]
    sub = BitMatrix.from_rows([cx.boundary_matrix.row(k) for k in idx],
                              cx.boundary_matrix.ncols)
    ker = kernel_basis(sub.transpose())
    return BitMatrix.from_rows(
        [BitVector.from_indices(len(cx), [idx[j] for j in row]) for row in ker],
        len(cx))


@dataclass
class TwoCycleSpace:
    complex: CellComplex
    cotree: list[int]
    cycles: list[EdgeSet]
    pairs: list[tuple[int, int]]
    basis: BitMatrix

    @property
    def dimension(self) -> int:
        return self.basis.nrows

    @property
    def count(self) -> int:
        return 1 << self.dimension


def two_cycle_space(k: Graph, cycles: list[EdgeSet] | None = None) -> TwoCycleSpace:
    """Products ``C_i × C_j`` of a cycle-space basis; defaults to fundamental cycles.

    Raises if the ``q²`` products are dependent or if ``cycles`` is not a basis.
    """
    cx = CellComplex(k)
    cs = cycle_space(k)
    if cycles is None:
        cycles, cotree = cs.cycles(), list(cs.cotree)
    else:
        cotree = []
        m = BitMatrix.from_rows([c.members for c in cycles], k.E) if cycles else BitMatrix(k.E)
        if len(cycles) != cs.dimension or (cycles and rank(m) != cs.dimension):
            raise ValueError("cycles do not form a basis of the cycle space")
    q = len(cycles)
    pairs = [(i, j) for i in range(q) for j in range(q)]
    rows = [torus(cycles[i], cycles[j], cx).members for i, j in pairs]
    basis = BitMatrix.from_rows(rows, len(cx))
    if rows and rank(basis) != q * q:
        raise AssertionError("torus products are dependent")
    return TwoCycleSpace(cx, cotree, cycles, pairs, basis)


@dataclass
class TorusDecomposition:
    terms: list[tuple[int, int]]  # pairs of non-tree edge indices
    tori: list[CellSet]

    def resum(self, cx: CellComplex) -> CellSet:
        total = cx.empty()
        for t in self.tori:
            total = total + t
        return total


def _fundamental(k: Graph) -> dict[int, EdgeSet]:
    cs = cycle_space(k)
    return dict(zip(cs.cotree, cs.cycles()))


def decompose_into_tori(c: CellSet) -> TorusDecomposition:
    """Write a 2-cycle as a sum of fundamental tori, indexed by its non-tree cells."""
    _require_2cycle(c)
    cx = c.complex.full
    full = c if c.complex is cx else c.complex.to_full(c)
    fund = _fundamental(cx.base)
    terms = [(s, t) for s, t in full.cells() if s in fund and t in fund]
    tori = [torus(fund[s], fund[t], cx) for s, t in terms]
    dec = TorusDecomposition(terms, tori)
    if dec.resum(cx) != full:
        raise AssertionError("torus decomposition does not re-sum")
    return dec


# simple cycles and vertex-disjoint tori -------------------------------------


def simple_cycles(g: Graph, max_cycles: int = 10**5) -> list[EdgeSet]:
    """Every simple cycle, by backtracking from its smallest vertex."""
    out: list[EdgeSet] = []
    adj = [[w for w, _ in g.adjacency[v]] for v in range(g.V)]
    for s in range(g.V):
        path = [s]
        on_path = {s}

        def extend(v: int) -> None:
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(g.walk(*path, closed=True))
                    if len(out) > max_cycles:
                        raise EnumerationLimitError(f"more than {max_cycles} simple cycles")
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return out


def _vertex_support(c: EdgeSet) -> frozenset[int]:
    return frozenset(c.vertices())


def vertex_disjoint_torus_span(k: Graph, max_cycles: int = 10**5) -> BitMatrix:
    """Tori ``Q × R`` over ordered pairs of vertex-disjoint simple cycles."""
    cx = CellComplex(k)
    cyc = simple_cycles(k, max_cycles)
    supp = [_vertex_support(c) for c in cyc]
    rows = []
    for i, j in combinations(range(len(cyc)), 2):
        if supp[i].isdisjoint(supp[j]):
            rows.append(torus(cyc[i], cyc[j], cx).members)
            rows.append(torus(cyc[j], cyc[i], cx).members)
    return BitMatrix.from_rows(rows, len(cx))


def two_k5_with_bridge() -> Graph:
    """Two copies of ``K_5`` on vertices 0..4 and 5..9 joined by the edge 4-5."""
    a = complete(5)
    edges = list(a.edges) + [(u + 5, v + 5) for u, v in a.edges] + [(4, 5)]
    return Graph(10, edges, name="2K5+bridge")


@dataclass
class RefutationReport:
    graph: str
    two_cycle_dimension: int
    span_rank: int

    @property
    def codimension(self) -> int:
        return self.two_cycle_dimension - self.span_rank

    @property
    def refuted(self) -> bool:
        # one extra generator raises the span rank by at most one
        return self.codimension >= 2


def refute_one_extra_generator(k: Graph | None = None, max_cycles: int = 10**5) -> RefutationReport:
    """Compare the 2-cycle space with the vertex-disjoint-torus span."""
    k = k if k is not None else two_k5_with_bridge()
    total = two_cycle_space(k).dimension
    span = vertex_disjoint_torus_span(k, max_cycles)
    r = rank(span) if span.nrows else 0
    return RefutationReport(k.name or "graph", total, r)


# symmetric 2-cycles ---------------------------------------------------------


def _fixed_two_cycles(cx: CellComplex, image: tuple[int, ...]) -> BitMatrix:
    """2-cycles of ``cx`` fixed by the cell permutation ``image``."""
    n = len(cx)
    shift = BitMatrix.from_rows(
        [BitVector.from_indices(n, [k, image[k]]) if image[k] != k else BitVector.zeros(n)
         for k in range(n)], n)
    return kernel_basis(cx.boundary_matrix.transpose().vstack(shift))


def symmetrized_torus_generators(k: Graph) -> BitMatrix:
    """Products of two fundamental cycles plus their swap, over unordered pairs of
    distinct non-tree edges."""
    cx = CellComplex(k)
    fund = _fundamental(k)
    keys = sorted(fund)
    rows = [(torus(fund[s], fund[t], cx) + torus(fund[t], fund[s], cx)).members
            for s, t in combinations(keys, 2)]
    return BitMatrix.from_rows(rows, len(cx))


@dataclass
class SymmetricTwoCycles:
    complex: CellComplex
    basis: BitMatrix  # symmetric 2-cycles of the complex
    symmetrized_span_rank: int
    in_span_dimension: int

    @property
    def dimension(self) -> int:
        return self.basis.nrows

    @property
    def all_decomposable(self) -> bool:
        return self.in_span_dimension == self.dimension


def _embed(cx: CellComplex, m: BitMatrix) -> BitMatrix:
    full = cx.full
    if full is cx:
        return m
    return BitMatrix.from_rows(
        [BitVector.from_indices(len(full), [full.cell_index[cx.cells[k]] for k in row])
         for row in m], len(full))


def symmetric_two_cycles(cx: CellComplex) -> SymmetricTwoCycles:
    sym = _fixed_two_cycles(cx, cx.swap_image)
    gens = symmetrized_torus_generators(cx.base)
    g_rank = rank(gens) if gens.nrows else 0
    emb = _embed(cx, sym)
    if not sym.nrows:
        inter = 0
    else:
        both = emb.vstack(gens) if gens.nrows else emb
        inter = sym.nrows + g_rank - rank(both)
    return SymmetricTwoCycles(cx, sym, g_rank, inter)


def decompose_symmetrized_tori(c: CellSet) -> list[tuple[int, int]] | None:
    """Pairs ``{σ, τ}`` whose symmetrized fundamental tori sum to ``c``.

    Returns None when ``c`` has a cell ``(σ, σ)`` off the tree region, which
    no sum of symmetrized tori can produce.
    """
    _require_2cycle(c)
    cx = c.complex
    if cx.swap(c) != c:
        raise NotATwoCycleError("cell set is not symmetric")
    full = cx.full
    fc = c if cx is full else cx.to_full(c)
    fund = _fundamental(full.base)
    outside = [(s, t) for s, t in fc.cells() if s in fund and t in fund]
    if any(s == t for s, t in outside):
        return None
    pairs = sorted({(min(s, t), max(s, t)) for s, t in outside})
    total = full.empty()
    for s, t in pairs:
        total = total + torus(fund[s], fund[t], full) + torus(fund[t], fund[s], full)
    if total != fc:
        raise AssertionError("symmetrized tori do not re-sum")
    return pairs


def symmetric_dimension_profile(k: Graph) -> tuple[int, int]:
    """(symmetric 1-cycles of the square, symmetric 2-cycles of ``K × K``)."""
    from .homology import symmetric_cycle_basis
    from .products import square_graph

    return symmetric_cycle_basis(square_graph(k)).nrows, symmetric_two_cycles(CellComplex(k)).dimension


# K_{n,n} generators ----------------------------------------------------------


@dataclass
class SpanVerdict:
    generators: int
    rank: int
    target_dimension: int
    inside: bool

    @property
    def spans(self) -> bool:
        return self.inside and self.rank == self.target_dimension

    @property
    def redundancy(self) -> int:
        return self.generators - self.rank


def _verdict(gens: list[BitVector], target: BitMatrix, ncols: int) -> SpanVerdict:
    g = BitMatrix.from_rows(gens, ncols)
    r = rank(g) if gens else 0
    inside = all(solve_in_span(target, v) is not None for v in gens) if target.nrows else not any(gens)
    return SpanVerdict(len(gens), r, target.nrows, inside)


@dataclass
class KnnSymmetricReport:
    n: int
    four_cycle_tori: int
    subgraph_products: int
    deleted_side: SpanVerdict
    transported_dimension: int
    transport_ok: bool
    tilde_side: SpanVerdict


def knn_symmetric_generators(n: int) -> KnnSymmetricReport:
    """Generators of the symmetric 2-cycles of the deleted complex of ``K_{n,n}``.

    Symmetrized tori of vertex-disjoint 4-cycles plus the deleted products of
    all ``K_{3,3}`` subgraphs; the verdict is their span against the full
    symmetric subspace.  The same subspace is transported to ``K~_n × K~_n``
    and compared with the ``t×t``-fixed 2-cycles and their generators.
    """
    if n not in (3, 4, 5):
        raise ValueError("n must be 3, 4 or 5")
    corr = CellCorrespondence(n)
    src = corr.source
    k = src.base
    ncells = len(src)

    # vertex-disjoint 4-cycles a b' c d' (one per choice of two left and two right vertices)
    squares = []
    for a, c in combinations(range(n), 2):
        for b, d in combinations(range(n, 2 * n), 2):
            squares.append(k.walk(a, b, c, d, closed=True))
    gens: list[BitVector] = []
    tori = 0
    for q, r in combinations(squares, 2):
        if _vertex_support(q).isdisjoint(_vertex_support(r)):
            t = torus(q, r, src) + torus(r, q, src)
            gens.append(t.members)
            tori += 1
    subs = 0
    for left in combinations(range(n), 3):
        for right in combinations(range(n, 2 * n), 3):
            edges = {k.index(u, v) for u in left for v in right}
            cells = [(s, t) for s, t in src.cells if s in edges and t in edges]
            gens.append(src.cell_set(cells).members)
            subs += 1
    sym = _fixed_two_cycles(src, src.swap_image)
    deleted = _verdict(gens, sym, ncells)

    # transport through f
    tgt = corr.target
    tsym = _fixed_two_cycles(tgt, corr.t_square_image)
    images = [corr(CellSet(src, row)) for row in sym]
    transported = BitMatrix.from_rows([c.members for c in images], len(tgt))
    ok = all(is_cellular_2cycle(c) and corr.t_square(c) == c for c in images) and \
        (rank(transported) if images else 0) == tsym.nrows == sym.nrows

    # t×t-symmetrized fundamental tori and copies of K~_3 × K~_3
    kt = corr.tilde
    inv = Involution.part_swap(kt)
    fund = _fundamental(kt)
    keys = sorted(fund)
    tgens: list[BitVector] = []
    for s in keys:
        for t in keys:
            a = torus(fund[s], fund[t], tgt)
            tgens.append((a + torus(inv(fund[s]), inv(fund[t]), tgt)).members)
    for triple in combinations(range(n), 3):
        edges = {kt.index(i, n + j) for i in triple for j in triple if i != j}
        tgens.append(tgt.cell_set([(s, t) for s in edges for t in edges]).members)
    tgens = [g for g in tgens if g]
    tilde = _verdict(tgens, tsym, len(tgt))
    return KnnSymmetricReport(n, tori, subs, deleted, sym.nrows, ok, tilde)


def deleted_knn_dimension(n: int) -> int:
    return two_cycle_kernel(CellComplex(complete_bipartite(n, n), deleted=True)).nrows


def tree_region_cells(k: Graph) -> list[tuple[int, int]]:
    """Cells with at least one coordinate in the greedy spanning forest."""
    tree = set(spanning_forest(k).tree_edges)
    return [(s, t) for s in range(k.E) for t in range(k.E) if s in tree or t in tree]
