"""Product graphs, squares, deleted squares, cell products and the named cycles in them.

In a product graph ``K□L`` the vertex ``(a, b)`` pairs a vertex of each
factor. An edge either keeps the first coordinate ``a`` and moves the
second along an edge ``τ`` of ``L`` (written ``(a, τ)``) or moves the first
along ``σ`` in ``K`` and keeps ``b`` (written ``(σ, b)``). The deleted square
keeps only pairs of distinct vertices.

Cells of ``K × L`` are ordered edge pairs ``(σ, τ)``; the deleted cell product
keeps the vertex-disjoint pairs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .gf2 import BitMatrix, BitVector
from .graph import EdgeSet, Graph, GraphError, Involution, tilde_complete, complete_bipartite


class ProductGraph:
    """The product graph ``left □ right``, optionally restricted to distinct pairs."""

    def __init__(self, left: Graph, right: Graph, distinct: bool = False):
        if distinct and left != right:
            raise GraphError("the deleted square needs equal factors")
        self.left = left
        self.right = right
        self.deleted = distinct
        self.pairs: list[tuple[int, int]] = [
            (a, b) for a in range(left.V) for b in range(right.V) if not (distinct and a == b)]
        self.vertex_of = {p: i for i, p in enumerate(self.pairs)}

        raw: list[tuple[int, int]] = []
        kinds: list[tuple[str, int, int]] = []
        for a in range(left.V):
            for j, (b, c) in enumerate(right.edges):
                p, q = (a, b), (a, c)
                if p in self.vertex_of and q in self.vertex_of:
                    raw.append((self.vertex_of[p], self.vertex_of[q]))
                    kinds.append(("R", a, j))
        for i, (b, c) in enumerate(left.edges):
            for a in range(right.V):
                p, q = (b, a), (c, a)
                if p in self.vertex_of and q in self.vertex_of:
                    raw.append((self.vertex_of[p], self.vertex_of[q]))
                    kinds.append(("L", i, a))
        labels = [f"({left.labels[a]},{right.labels[b]})" for a, b in self.pairs]
        prefix = "deleted-square" if distinct else ("square" if left == right else "product")
        name = f"{prefix}({left.name})" if left == right else f"{left.name}□{right.name}"
        self.graph = Graph(len(self.pairs), raw, labels, name)

        self.kind: list[tuple[str, int, int]] = [None] * self.graph.E  # type: ignore[list-item]
        self._by_kind: dict[tuple[str, int, int], int] = {}
        for (u, v), k in zip(raw, kinds):
            e = self.graph.index(u, v)
            self.kind[e] = k
            self._by_kind[k] = e

    def __repr__(self) -> str:
        return f"ProductGraph({self.graph.name}: V={self.graph.V}, E={self.graph.E})"

    def vertex(self, a: int | str, b: int | str) -> int:
        return self.vertex_of[(self.left.vertex(a), self.right.vertex(b))]

    def edge_fixed_first(self, a: int, tau: int) -> int:
        """Edge ``(a, τ)``: first coordinate ``a``, second moves along right edge ``τ``."""
        try:
            return self._by_kind[("R", a, tau)]
        except KeyError:
            raise GraphError(f"no edge ({a}, {self.right.edge_label(tau)}) in {self.graph.name}") from None

    def edge_fixed_second(self, sigma: int, b: int) -> int:
        """Edge ``(σ, b)``: first moves along left edge ``σ``, second coordinate ``b``."""
        try:
            return self._by_kind[("L", sigma, b)]
        except KeyError:
            raise GraphError(f"no edge ({self.left.edge_label(sigma)}, {b}) in {self.graph.name}") from None

    def has_kind(self, kind: tuple[str, int, int]) -> bool:
        return kind in self._by_kind

    def walk(self, *pairs: tuple[int | str, int | str]) -> EdgeSet:
        """Closed walk through the given vertex pairs."""
        return self.graph.walk(*[self.vertex(a, b) for a, b in pairs])

    def empty(self) -> EdgeSet:
        return self.graph.empty()

    # factor swap ----------------------------------------------------------

    def _require_square(self) -> None:
        if self.left != self.right:
            raise GraphError("factor swap needs equal factors")

    @cached_property
    def swap_vertex_image(self) -> tuple[int, ...]:
        self._require_square()
        return tuple(self.vertex_of[(b, a)] for a, b in self.pairs)

    @cached_property
    def swap_edge_image(self) -> tuple[int, ...]:
        self._require_square()
        out = []
        for kind in self.kind:
            tag, x, y = kind
            # (a, τ) <-> (τ, a)
            out.append(self._by_kind[("L", y, x)] if tag == "R" else self._by_kind[("R", y, x)])
        return tuple(out)

    @cached_property
    def swap_involution(self) -> Involution:
        return Involution(self.graph, self.swap_vertex_image)

    def swap(self, c: EdgeSet) -> EdgeSet:
        return self.graph.edge_set([self.swap_edge_image[e] for e in c])

    # projections ----------------------------------------------------------

    def projections(self, c: EdgeSet) -> tuple[EdgeSet, EdgeSet]:
        """``(left, right)``: left-factor edges ``σ`` with an odd number of ``(σ, b)`` in ``c``,
        and right-factor edges ``τ`` with an odd number of ``(a, τ)`` in ``c``."""
        cx = [0] * self.left.E
        cy = [0] * self.right.E
        for e in c:
            tag, x, y = self.kind[e]
            if tag == "R":
                cy[y] ^= 1
            else:
                cx[x] ^= 1
        return (self.left.edge_set([i for i, b in enumerate(cx) if b]),
                self.right.edge_set([i for i, b in enumerate(cy) if b]))

    # embedding of a deleted square into the full square --------------------

    def to_full(self, c: EdgeSet, full: ProductGraph) -> EdgeSet:
        return full.graph.edge_set([full._by_kind[self.kind[e]] for e in c])


def product_graph(k: Graph, l: Graph) -> ProductGraph:
    return ProductGraph(k, l)


def square_graph(k: Graph) -> ProductGraph:
    return ProductGraph(k, k)


def deleted_square_graph(k: Graph) -> ProductGraph:
    return ProductGraph(k, k, distinct=True)


# named cycles --------------------------------------------------------------


def _edge(g: Graph, e: int | tuple) -> int:
    return g.index(*e) if isinstance(e, tuple) else int(e)


def _cycle_vertices(g: Graph, cyc: Sequence[int | str]) -> list[int]:
    vs = [g.vertex(v) for v in cyc]
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise GraphError("a simple cycle needs at least 3 pairwise distinct vertices")
    for u, v in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(u, v):
            raise GraphError(f"{g.labels[u]}{g.labels[v]} is not an edge")
    return vs


def boundary(pg: ProductGraph, sigma: int | tuple, tau: int | tuple) -> EdgeSet:
    """``ab □ uv = (a,u)(b,u)(b,v)(a,v)`` for ``σ = ab`` in the left factor, ``τ = uv`` in the right."""
    a, b = pg.left.edges[_edge(pg.left, sigma)]
    u, v = pg.right.edges[_edge(pg.right, tau)]
    return pg.walk((a, u), (b, u), (b, v), (a, v))


def vertex_times(pg: ProductGraph, a: int | str, c: EdgeSet | Sequence) -> EdgeSet:
    """``a × C``: first coordinate fixed at ``a``, second runs over the 1-cycle ``C``."""
    a = pg.left.vertex(a)
    if not isinstance(c, EdgeSet):
        c = pg.right.simple_cycle(_cycle_vertices(pg.right, c))
    return pg.graph.edge_set([pg.edge_fixed_first(a, t) for t in c])


def times_vertex(pg: ProductGraph, c: EdgeSet | Sequence, a: int | str) -> EdgeSet:
    """``C × a``: first coordinate runs over ``C``, second fixed at ``a``."""
    a = pg.right.vertex(a)
    if not isinstance(c, EdgeSet):
        c = pg.left.simple_cycle(_cycle_vertices(pg.left, c))
    return pg.graph.edge_set([pg.edge_fixed_second(s, a) for s in c])


def symmetrized_cycle(pg: ProductGraph, a: int | str, c: EdgeSet | Sequence) -> EdgeSet:
    """``a × C + C × a``."""
    return vertex_times(pg, a, c) + times_vertex(pg, c, a)


def diagonal(pg: ProductGraph, cyc: Sequence[int | str]) -> EdgeSet:
    """``diag C = (v1,v1)(v1,v2)(v2,v2)...(vk,vk)(vk,v1)``."""
    vs = _cycle_vertices(pg.left, cyc)
    k = len(vs)
    seq = []
    for i in range(k):
        seq += [(vs[i], vs[i]), (vs[i], vs[(i + 1) % k])]
    return pg.walk(*seq)


def off_diagonal(pg: ProductGraph, cyc: Sequence[int | str]) -> EdgeSet:
    """``(v1,v2)(v1,v3)(v2,v3)(v2,v4)...(vk,v1)(vk,v2)``."""
    vs = _cycle_vertices(pg.left, cyc)
    k = len(vs)
    seq = []
    for i in range(k):
        seq += [(vs[i], vs[(i + 1) % k]), (vs[i], vs[(i + 2) % k])]
    return pg.walk(*seq)


def antidiagonal(pg: ProductGraph, cyc: Sequence[int | str]) -> EdgeSet:
    """``(v1,v1)(v2,v1)(v2,vk)(v3,vk)...(vk,v2)(v1,v2)``: first moves forward, second backward."""
    vs = _cycle_vertices(pg.left, cyc)
    k = len(vs)
    seq = []
    for j in range(2 * k):
        x = ((j + 1) // 2) % k
        y = (-(j // 2)) % k
        seq.append((vs[x], vs[y]))
    return pg.walk(*seq)


def triodic_cycle(pg: ProductGraph, center: int | str, leaves: Sequence[int | str]) -> EdgeSet:
    """Triodic cycle of the ``K_{3,1}`` with the given centre and leaves ``l1, l2, l3``.

    The written half ``(l1,l3)(l1,c)(l1,l2)(c,l2)(l3,l2)(l3,c)`` is followed by
    its image under the factor swap; the result must close into 12 edges.
    """
    g = pg.left
    c = g.vertex(center)
    l1, l2, l3 = (g.vertex(v) for v in leaves)
    if len({c, l1, l2, l3}) != 4 or not all(g.has_edge(c, l) for l in (l1, l2, l3)):
        raise GraphError("centre and leaves do not span a K_{3,1} subgraph")
    half = [(l1, l3), (l1, c), (l1, l2), (c, l2), (l3, l2), (l3, c)]
    full = half + [(y, x) for x, y in half]
    out = pg.walk(*full)
    if len(out) != 12:
        raise AssertionError("triodic cycle did not close into 12 edges")
    return out


def named_cycle(pg: ProductGraph, kind: str, *params) -> EdgeSet:
    """Dispatch on ``kind`` in {boundary, diagonal, off_diagonal, antidiagonal, left,
    right, symmetrized, triodic}."""
    table = {
        "boundary": boundary,
        "diagonal": diagonal,
        "off_diagonal": off_diagonal,
        "antidiagonal": antidiagonal,
        "left": vertex_times,
        "right": times_vertex,
        "symmetrized": symmetrized_cycle,
        "triodic": triodic_cycle,
    }
    try:
        return table[kind](pg, *params)
    except KeyError:
        raise GraphError(f"unknown cycle kind {kind!r}") from None


# cell complexes ------------------------------------------------------------


class CellComplex:
    """Cells ``(σ, τ)`` of ``K × K`` in row-major order, or only the disjoint pairs."""

    def __init__(self, base: Graph, deleted: bool = False):
        self.base = base
        self.deleted = deleted
        E = base.E
        if deleted:
            cells = [(i, j) for i in range(E) for j in range(E)
                     if not base.edges_share_vertex(i, j)]
        else:
            cells = [(i, j) for i in range(E) for j in range(E)]
        self.cells: list[tuple[int, int]] = cells
        self.cell_index = {c: k for k, c in enumerate(cells)}
        self.name = f"{'deleted-cells' if deleted else 'cells'}({base.name})"

    def __repr__(self) -> str:
        return f"CellComplex({self.name}: {len(self.cells)} cells)"

    def __len__(self) -> int:
        return len(self.cells)

    @cached_property
    def square(self) -> ProductGraph:
        """The product graph carrying the boundaries of these cells."""
        return ProductGraph(self.base, self.base, distinct=self.deleted)

    def cell_boundary_edges(self, cell: tuple[int, int]) -> list[int]:
        """The four edges ``(a,τ), (b,τ), (σ,u), (σ,v)`` of ``σ □ τ``."""
        s, t = cell
        a, b = self.base.edges[s]
        u, v = self.base.edges[t]
        sq = self.square
        return [sq.edge_fixed_first(a, t), sq.edge_fixed_first(b, t),
                sq.edge_fixed_second(s, u), sq.edge_fixed_second(s, v)]

    @cached_property
    def boundary_matrix(self) -> BitMatrix:
        """Row per cell: its boundary as an edge set of :attr:`square`."""
        E = self.square.graph.E
        rows = [BitVector.from_indices(E, self.cell_boundary_edges(c)) for c in self.cells]
        return BitMatrix.from_rows(rows, E)

    def empty(self) -> CellSet:
        return CellSet(self, BitVector.zeros(len(self.cells)))

    def cell_set(self, cells: Iterable[tuple[int, int] | int]) -> CellSet:
        """CellSet from ``(σ, τ)`` edge-index pairs or cell indices (mod-2 multiplicity)."""
        idx = []
        for c in cells:
            if isinstance(c, tuple):
                try:
                    idx.append(self.cell_index[c])
                except KeyError:
                    raise GraphError(f"cell {c} is not in {self.name}") from None
            else:
                idx.append(int(c))
        return CellSet(self, BitVector.from_indices(len(self.cells), idx))

    def all_cells(self) -> CellSet:
        return CellSet(self, BitVector.from_indices(len(self.cells), range(len(self.cells))))

    @cached_property
    def swap_image(self) -> tuple[int, ...]:
        return tuple(self.cell_index[(t, s)] for s, t in self.cells)

    def swap(self, c: CellSet) -> CellSet:
        return CellSet(self, BitVector.from_indices(len(self.cells),
                                                    [self.swap_image[k] for k in c]))

    @cached_property
    def full(self) -> CellComplex:
        return self if not self.deleted else CellComplex(self.base)

    def to_full(self, c: CellSet) -> CellSet:
        return self.full.cell_set([self.cells[k] for k in c])

    def from_full(self, c: CellSet) -> CellSet:
        """Restrict a cell set of the full square; raises if it leaves this complex."""
        return self.cell_set([c.complex.cells[k] for k in c])

    def adjacent(self, x: tuple[int, int], y: tuple[int, int]) -> bool:
        """Distinct cells sharing one coordinate, the other coordinates sharing a vertex."""
        if x == y:
            return False
        share = self.base.edges_share_vertex
        return (x[0] == y[0] and share(x[1], y[1])) or (x[1] == y[1] and share(x[0], y[0]))


@dataclass(frozen=True)
class CellSet:
    """A set of cells of a complex (a 2-chain over GF(2))."""

    complex: CellComplex
    members: BitVector

    def __add__(self, other: CellSet) -> CellSet:
        if other.complex is not self.complex:
            raise GraphError("cell sets live in different complexes")
        return CellSet(self.complex, self.members + other.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members.indices())

    def __len__(self) -> int:
        return self.members.weight()

    def __bool__(self) -> bool:
        return bool(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellSet):
            return NotImplemented
        return self.complex is other.complex and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.complex), self.members))

    def cells(self) -> list[tuple[int, int]]:
        return [self.complex.cells[k] for k in self]

    def __repr__(self) -> str:
        g = self.complex.base
        return "CellSet({" + ", ".join(f"({g.edge_label(s)},{g.edge_label(t)})"
                                       for s, t in self.cells()) + "})"


def cell_complex(k: Graph) -> CellComplex:
    return CellComplex(k)


def deleted_cell_complex(k: Graph) -> CellComplex:
    return CellComplex(k, deleted=True)


def cell_boundary_edges(cx: CellComplex, cell: tuple[int, int]) -> list[int]:
    return cx.cell_boundary_edges(cell)


def swap_cell(cell: tuple[int, int]) -> tuple[int, int]:
    return cell[1], cell[0]


# the K_{n,n} <-> K~_n cell correspondence -----------------------------------


class CellCorrespondence:
    """``f(σ1σ2', τ1τ2') = (σ1τ1', σ2τ2')`` from the deleted cells of ``K_{n,n}``
    to the cells of ``K~_n × K~_n``."""

    def __init__(self, n: int):
        if n < 3:
            raise GraphError("the cell correspondence needs n >= 3")
        self.n = n
        self.source = CellComplex(complete_bipartite(n, n), deleted=True)
        self.tilde = tilde_complete(n)
        self.target = CellComplex(self.tilde)
        src_g = self.source.base
        mapping = []
        for s, t in self.source.cells:
            s1, s2 = src_g.edges[s]
            t1, t2 = src_g.edges[t]
            # s1, t1 in [n]; s2, t2 in [n]' stored as n..2n-1
            mapping.append(self.target.cell_index[(self.tilde.index(s1, n + t1),
                                                   self.tilde.index(s2 - n, t2))])
        self.mapping = tuple(mapping)

    def __call__(self, c: CellSet) -> CellSet:
        if c.complex is not self.source:
            raise GraphError("cell set is not on the source complex")
        return self.target.cell_set([self.mapping[k] for k in c])

    def is_bijective(self) -> bool:
        return sorted(self.mapping) == list(range(len(self.target.cells)))

    def preserves_adjacency(self) -> bool:
        """Exhaustive check: adjacent before iff adjacent after."""
        src, tgt = self.source, self.target
        cells = src.cells
        for x in range(len(cells)):
            for y in range(x + 1, len(cells)):
                before = src.adjacent(cells[x], cells[y])
                after = tgt.adjacent(tgt.cells[self.mapping[x]], tgt.cells[self.mapping[y]])
                if before != after:
                    return False
        return True

    @cached_property
    def t_square_image(self) -> tuple[int, ...]:
        """Cell permutation ``(x, y) -> (tx, ty)`` on ``K~_n × K~_n``."""
        t = Involution.part_swap(self.tilde)
        return tuple(self.target.cell_index[(t.edge_image[s], t.edge_image[u])]
                     for s, u in self.target.cells)

    def t_square(self, c: CellSet) -> CellSet:
        return self.target.cell_set([self.t_square_image[k] for k in c])

    def commutes_with_swap(self) -> bool:
        """``f ∘ swap == t² ∘ f`` on every cell."""
        src = self.source
        return all(self.mapping[src.swap_image[k]] == self.t_square_image[self.mapping[k]]
                   for k in range(len(src.cells)))


def knn_tilde_correspondence(n: int) -> CellCorrespondence:
    return CellCorrespondence(n)


def cell_incidence_by_edge(cx: CellComplex) -> dict[int, list[int]]:
    """For each edge of the carrying product graph, the cells whose boundary uses it."""
    out: dict[int, list[int]] = {e: [] for e in range(cx.square.graph.E)}
    for k, cell in enumerate(cx.cells):
        for e in cx.cell_boundary_edges(cell):
            out[e].append(k)
    return out

