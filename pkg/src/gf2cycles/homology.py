"""1-cycles of squares and deleted squares modulo boundaries.

Classes are represented through a fixed transversal: the boundary row
space is extended greedily by fundamental cycles of the product graph, so
every class has canonical coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cycles import NotACycleError, cycle_space, is_one_cycle
from .gf2 import BitMatrix, BitVector, RowSpace, extend_basis, kernel_basis, rank
from .graph import EdgeSet, GraphError, components
from .products import ProductGraph, boundary, times_vertex, vertex_times


@dataclass
class BoundarySpace:
    """Boundaries ``σ □ τ`` over the admissible cells of a product graph.

    All ordered edge pairs are admissible in a full product; only
    vertex-disjoint pairs in a deleted square.
    """

    ambient: ProductGraph
    cells: list[tuple[int, int]]
    generators: BitMatrix

    @cached_property
    def solver(self) -> RowSpace:
        return RowSpace(self.generators)

    @cached_property
    def rank(self) -> int:
        return self.solver.rank

    @property
    def dependencies(self) -> BitMatrix:
        """Basis of the cell sets whose boundaries sum to zero."""
        return kernel_basis(self.generators.transpose()) if self.generators.nrows else BitMatrix(0)


def boundary_space(pg: ProductGraph) -> BoundarySpace:
    k, l = pg.left, pg.right
    cells = [(s, t) for s in range(k.E) for t in range(l.E)
             if not (pg.deleted and set(k.edges[s]) & set(l.edges[t]))]
    rows = [boundary(pg, s, t).members for s, t in cells]
    return BoundarySpace(pg, cells, BitMatrix.from_rows(rows, pg.graph.E))


def _require_cycle(c: EdgeSet) -> None:
    if not is_one_cycle(c):
        raise NotACycleError("edge set is not a 1-cycle")


def is_sum_of_boundaries(c: EdgeSet, bs: BoundarySpace) -> list[tuple[int, int]] | None:
    """Cells whose boundaries sum to ``c``, or None when ``c`` is not a boundary sum."""
    _require_cycle(c)
    coeff = bs.solver.solve(c.members)
    if coeff is None:
        return None
    return [bs.cells[k] for k in coeff]


def boundary_sum_of_cells(bs: BoundarySpace, cells: list[tuple[int, int]]) -> EdgeSet:
    pg = bs.ambient
    total = pg.empty()
    for s, t in cells:
        total = total + boundary(pg, s, t)
    return total


def homologous(c: EdgeSet, c2: EdgeSet, bs: BoundarySpace) -> bool:
    _require_cycle(c)
    _require_cycle(c2)
    return bs.solver.contains((c + c2).members)


@dataclass
class H1Quotient:
    """Cycles of the ambient graph modulo the boundary span."""

    boundaries: BoundarySpace
    cycle_dimension: int
    transversal: BitMatrix
    _solver: RowSpace = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.transversal.nrows

    def classify(self, c: EdgeSet) -> BitVector:
        """Coordinates of the class of ``c`` over the transversal."""
        _require_cycle(c)
        coeff = self._solver.solve(c.members)
        if coeff is None:
            raise AssertionError("cycle outside boundaries + transversal")
        nb = self.boundaries.generators.nrows
        return BitVector.from_indices(self.dimension, [k - nb for k in coeff if k >= nb])


def h1_mod_boundaries(pg: ProductGraph, bs: BoundarySpace | None = None) -> H1Quotient:
    """Dimension of 1-cycles modulo boundaries, with a transversal basis."""
    bs = bs or boundary_space(pg)
    cs = cycle_space(pg.graph)
    transversal, _ = extend_basis(bs.generators, cs.basis)
    stacked = bs.generators.vstack(transversal)
    if cs.dimension - bs.rank != transversal.nrows:
        raise AssertionError("transversal size disagrees with dimension count")
    return H1Quotient(bs, cs.dimension, transversal, RowSpace(stacked))


@dataclass
class KunnethReduction:
    left_part: EdgeSet
    right_part: EdgeSet
    certificate: list[tuple[int, int]]
    unique: bool


def kunneth_injective(pg: ProductGraph, bs: BoundarySpace, a: int) -> bool:
    """Whether ``(C1, C2) -> [C1 × a + a × C2]`` is injective on pairs of 1-cycles."""
    cs = cycle_space(pg.left)
    rows = [times_vertex(pg, c, a).members for c in cs.cycles()]
    rows += [vertex_times(pg, a, c).members for c in cs.cycles()]
    if not rows:
        return True
    both = bs.generators.vstack(BitMatrix.from_rows(rows, pg.graph.E))
    return rank(both) - bs.rank == len(rows)


def kunneth_reduce(c: EdgeSet, a: int, bs: BoundarySpace) -> KunnethReduction:
    """``c ~ L × a + a × R`` for the projections ``(L, R)``, with a boundary certificate."""
    pg = bs.ambient
    if pg.deleted or pg.left != pg.right:
        raise GraphError("Künneth reduction needs a full square")
    if components(pg.left)[0] != 1:
        raise GraphError("factor graph is disconnected")
    _require_cycle(c)
    cx, cy = pg.projections(c)
    z = c + times_vertex(pg, cx, a) + vertex_times(pg, a, cy)
    cert = is_sum_of_boundaries(z, bs)
    if cert is None:
        raise AssertionError("difference is not a boundary sum")
    return KunnethReduction(cx, cy, cert, kunneth_injective(pg, bs, a))


# symmetric 1-cycles ---------------------------------------------------------


@dataclass
class SymmetricH1:
    symmetric_cycles: int
    symmetrized_boundaries: int

    @property
    def quotient(self) -> int:
        return self.symmetric_cycles - self.symmetrized_boundaries


def symmetric_cycle_basis(pg: ProductGraph) -> BitMatrix:
    g = pg.graph
    shift = BitMatrix.from_rows(
        [BitVector.unit(g.E, e) + BitVector.unit(g.E, pg.swap_edge_image[e]) for e in range(g.E)],
        g.E)
    return kernel_basis(g.incidence.vstack(shift))


def symmetrized_boundary_generators(bs: BoundarySpace) -> BitMatrix:
    """Swap-orbit sums of boundaries: ``σ□τ + τ□σ`` for ``σ != τ`` and ``σ□σ`` alone."""
    pg = bs.ambient
    index = {cell: k for k, cell in enumerate(bs.cells)}
    rows = []
    for k, (s, t) in enumerate(bs.cells):
        if s < t:
            rows.append(bs.generators.row(k) + bs.generators.row(index[(t, s)]))
        elif s == t:
            rows.append(bs.generators.row(k))
    return BitMatrix.from_rows(rows, pg.graph.E)


def symmetric_h1(pg: ProductGraph, bs: BoundarySpace | None = None) -> SymmetricH1:
    """Dimensions of symmetric 1-cycles and of their symmetrized-boundary subspace."""
    bs = bs or boundary_space(pg)
    sym = symmetric_cycle_basis(pg)
    gens = symmetrized_boundary_generators(bs)
    return SymmetricH1(sym.nrows, rank(gens) if gens.nrows else 0)


def symmetric_image(pg: ProductGraph, c: EdgeSet, a: int) -> EdgeSet:
    """``C ↦ C × a + a × C``."""
    return times_vertex(pg, c, a) + vertex_times(pg, a, c)


def span_membership(generators: list[EdgeSet], target: EdgeSet) -> list[int] | None:
    """Indices of generators summing to ``target``, or None."""
    from .gf2 import solve_in_span

    if not generators:
        return [] if not target else None
    m = BitMatrix.from_rows([g.members for g in generators], target.graph.E)
    coeff = solve_in_span(m, target.members)
    return None if coeff is None else coeff.indices()
