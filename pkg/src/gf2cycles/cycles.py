"""1-cycles of a graph: the cycle space, its decompositions and relatives.

Covers the mod-2 cycle space with its fundamental basis, four ways of
writing a 1-cycle as a sum of special cycles, cycles fixed by an
involution, integer cycles under the Kirchhoff rule, and sign assignments
up to vertex flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .gf2 import BitMatrix, BitVector, kernel_basis
from .graph import (
    EdgeSet,
    Graph,
    GraphError,
    Involution,
    SpanningForest,
    components,
    fundamental_cycle,
    spanning_forest,
)


class NotACycleError(ValueError):
    """The input chain is not a cycle."""


def is_one_cycle(c: EdgeSet) -> bool:
    """True iff every vertex meets an even number of edges of ``c``."""
    g = c.graph
    if g.E == 0:
        return True
    return not g.incidence.dot(c.members)


def _require_cycle(c: EdgeSet) -> None:
    if not is_one_cycle(c):
        raise NotACycleError("edge set is not a 1-cycle")


@dataclass
class CycleSpace:
    """Fundamental-cycle basis of the cycle space of a graph.

    ``basis`` row ``k`` is the fundamental cycle of ``cotree[k]``.
    """

    graph: Graph
    forest: SpanningForest
    cotree: tuple[int, ...]
    basis: BitMatrix

    @property
    def dimension(self) -> int:
        return len(self.cotree)

    @property
    def count(self) -> int:
        return 1 << self.dimension

    def cycle(self, k: int) -> EdgeSet:
        return EdgeSet(self.graph, self.basis.row(k))

    def cycles(self) -> list[EdgeSet]:
        return [self.cycle(k) for k in range(self.dimension)]

    def coordinates(self, c: EdgeSet) -> BitVector:
        return coordinates(c, self)

    def combine(self, coefficients: BitVector) -> EdgeSet:
        return EdgeSet(self.graph, self.basis.combine(coefficients))


def cycle_space(g: Graph, forest: SpanningForest | None = None) -> CycleSpace:
    """Basis of fundamental cycles; dimension ``E - V + N``."""
    f = forest or spanning_forest(g)
    rows = [fundamental_cycle(f, e).members for e in f.cotree_edges]
    return CycleSpace(g, f, f.cotree_edges, BitMatrix.from_rows(rows, g.E))


def coordinates(c: EdgeSet, space: CycleSpace | None = None) -> BitVector:
    """Coefficients of ``c`` over the fundamental basis: the non-tree edges it uses."""
    _require_cycle(c)
    space = space or cycle_space(c.graph)
    return BitVector.from_indices(space.dimension,
                                  [k for k, e in enumerate(space.cotree) if e in c.members])


def is_simple_cycle(c: EdgeSet) -> bool:
    """Nonempty, connected and every touched vertex has degree two."""
    if not c:
        return False
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in c.pairs():
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(deg)


def cycle_vertex_order(c: EdgeSet) -> list[int]:
    """Vertices of a simple cycle in walking order, starting at the smallest one."""
    if not is_simple_cycle(c):
        raise GraphError("not a simple cycle")
    adj: dict[int, list[int]] = {}
    for u, v in c.pairs():
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


# decompositions -------------------------------------------------------------


def decompose_simple(c: EdgeSet) -> list[EdgeSet]:
    """Split a 1-cycle into edge-disjoint simple cycles by walk extraction.

    Walk along unused edges (lowest index first) until a vertex repeats,
    cut off the closed loop as one simple cycle, and carry on.
    """
    _require_cycle(c)
    g = c.graph
    unused = set(c)
    out: list[EdgeSet] = []
    while unused:
        cur = g.edges[min(unused)][0]
        path_v = [cur]
        path_e: list[int] = []
        pos = {cur: 0}
        while True:
            step = next(((w, i) for w, i in g.adjacency[cur] if i in unused), None)
            if step is None:
                # an even-degree walk only runs dry back at its start
                assert not path_e
                break
            w, i = step
            unused.discard(i)
            if w in pos:
                k = pos[w]
                out.append(g.edge_set(path_e[k:] + [i]))
                for v in path_v[k + 1:]:
                    del pos[v]
                del path_v[k + 1:]
                del path_e[k:]
            else:
                pos[w] = len(path_v)
                path_v.append(w)
                path_e.append(i)
            cur = w
    return out


def chords(g: Graph, cycle: EdgeSet) -> list[int]:
    """Edges of ``g`` joining two non-consecutive vertices of a simple cycle."""
    vs = set(cycle_vertex_order(cycle))
    return [i for i, (u, v) in enumerate(g.edges)
            if u in vs and v in vs and i not in cycle.members]


def decompose_chordless(c: EdgeSet) -> list[EdgeSet]:
    """Write a 1-cycle as a sum of chordless simple cycles.

    Each simple cycle with a chord is split along its lowest-indexed chord
    into two strictly shorter cycles whose sum is the original one.
    """
    g = c.graph
    work = decompose_simple(c)
    out: list[EdgeSet] = []
    while work:
        cyc = work.pop()
        ch = chords(g, cyc)
        if not ch:
            out.append(cyc)
            continue
        a, b = g.edges[ch[0]]
        order = cycle_vertex_order(cyc)
        i, j = sorted((order.index(a), order.index(b)))
        first = order[i:j + 1]
        second = order[j:] + order[:i + 1]
        work.append(g.walk(*first))
        work.append(g.walk(*second))
    out.sort(key=lambda s: s.members.indices())
    return out


def _is_tilde(g: Graph) -> bool:
    n = g.V // 2
    return (g.V % 2 == 0 and g.E == n * (n - 1)
            and all(u < n <= v and v - u != n for u, v in g.edges))


def decompose_tilde_squares(c: EdgeSet) -> list[EdgeSet]:
    """Write a 1-cycle of ``K~_n`` (n >= 4) as a sum of 4-cycles.

    Chordless pieces are squares except for hexagons ``m1 m2' m3 m1' m2 m3'``.
    Each hexagon becomes ``m1 m2' m3 a' + m2 m3' m1 a' + m3 m1' m2 a'`` for
    the smallest vertex ``a`` off the hexagon; the ``a'`` edges cancel in pairs.
    """
    g = c.graph
    n = g.V // 2
    if not _is_tilde(g) or n < 4:
        raise GraphError("graph is not K~_n with n >= 4")
    out: list[EdgeSet] = []
    for piece in decompose_chordless(c):
        if len(piece) == 4:
            out.append(piece)
            continue
        order = cycle_vertex_order(piece)
        assert len(order) == 6, "chordless cycles of K~_n have length 4 or 6"
        m1, m2, m3 = order[0], order[1] - n, order[2]
        a = min(set(range(n)) - {m1, m2, m3}) + n
        out.append(g.walk(m1, m2 + n, m3, a))
        out.append(g.walk(m2, m3 + n, m1, a))
        out.append(g.walk(m3, m1 + n, m2, a))
    return out


def _is_complete(g: Graph) -> bool:
    return g.E == g.V * (g.V - 1) // 2


def decompose_triangles_complete(c: EdgeSet) -> list[tuple[int, int, int]]:
    """Triangles ``(i, j, n)`` through the last vertex, one per edge of ``c`` avoiding it."""
    g = c.graph
    if not _is_complete(g):
        raise GraphError("graph is not complete")
    _require_cycle(c)
    apex = g.V - 1
    return [(u, v, apex) for u, v in c.pairs() if apex not in (u, v)]


def decompose_squares_bipartite(c: EdgeSet) -> list[tuple[int, int, int, int]]:
    """4-cycles ``a b' n n'`` on ``K_{n,n}``, one per edge of ``c`` inside ``K_{n-1,n-1}``.

    Each 4-cycle is returned as its vertex sequence.
    """
    g = c.graph
    n = g.V // 2
    if g.V % 2 or g.E != n * n or any(not (u < n <= v) for u, v in g.edges):
        raise GraphError("graph is not K_{n,n} with parts 0..n-1 and n..2n-1")
    _require_cycle(c)
    last, last_p = n - 1, 2 * n - 1
    return [(a, b, last, last_p) for a, b in c.pairs() if a != last and b != last_p]


def tilde_base(n: int) -> list[tuple[tuple[int, int], EdgeSet]]:
    """Base ``C_{ij'} = 12'31'ij'`` of the cycle space of ``K~_n``.

    One element per edge ``ij'`` with ``i, j > 1``, ``i != j`` and
    ``(i, j) != (3, 2)`` (1-based), keyed by that pair.
    """
    from .graph import tilde_complete

    if n < 3:
        raise GraphError("tilde_base needs n >= 3")
    g = tilde_complete(n)
    out = []
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            if i == j or (i, j) == (3, 2):
                continue
            out.append(((i, j), g.walk("1", "2'", "3", "1'", str(i), f"{j}'")))
    return out


def symmetric_cycle_space(g: Graph, t: Involution) -> tuple[BitMatrix, int]:
    """Basis and dimension of the 1-cycles ``C`` with ``tC = C``.

    Computed as the kernel of the incidence matrix stacked on ``id + t``.
    """
    if t.graph != g:
        raise GraphError("involution is on a different graph")
    if g.E == 0:
        return BitMatrix(0), 0
    shift = BitMatrix.from_rows(
        [BitVector.unit(g.E, i) + BitVector.unit(g.E, t.edge_image[i]) for i in range(g.E)], g.E)
    stacked = g.incidence.vstack(shift) if g.V else shift
    basis = kernel_basis(stacked)
    return basis, basis.nrows


@dataclass
class SymmetricBase:
    fixed: EdgeSet
    pairs: list[tuple[EdgeSet, EdgeSet]]

    def elements(self) -> list[EdgeSet]:
        return [self.fixed] + [c for pair in self.pairs for c in pair]


def tilde_symmetric_base(n: int) -> SymmetricBase:
    """Base of all 1-cycles of ``K~_n``: the fixed cycle ``K~_3`` plus swapped pairs.

    The pairs are ``(C_{ij'}, t C_{ij'})`` for ``i > j > 1``, ``(i, j) != (3, 2)``.
    """
    base = dict(tilde_base(n))
    g = base[(2, 3)].graph
    t = Involution.part_swap(g)
    pairs = [(base[(i, j)], t(base[(i, j)]))
             for i in range(2, n + 1) for j in range(2, i) if (i, j) != (3, 2)]
    return SymmetricBase(base[(2, 3)], pairs)


# integer 1-cycles -----------------------------------------------------------


class OrientedGraph:
    """A graph with one endpoint of each edge designated as its head."""

    def __init__(self, graph: Graph, heads: Sequence[int] | None = None):
        if heads is None:
            heads = [v for _, v in graph.edges]
        heads = tuple(int(h) for h in heads)
        if len(heads) != graph.E:
            raise GraphError("one head per edge is required")
        for (u, v), h in zip(graph.edges, heads):
            if h not in (u, v):
                raise GraphError(f"head {h} is not an endpoint of edge ({u}, {v})")
        self.graph = graph
        self.heads = heads

    def tail(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u if self.heads[e] == v else v

    def sign(self, e: int, frm: int, to: int) -> int:
        """+1 if walking ``frm -> to`` along edge ``e`` follows its orientation."""
        return 1 if self.heads[e] == to else -1

    def flipped(self, edges: Sequence[int]) -> OrientedGraph:
        heads = list(self.heads)
        for e in edges:
            heads[e] = self.tail(e)
        return OrientedGraph(self.graph, heads)


@dataclass(frozen=True)
class IntegerChain:
    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.E:
            raise GraphError("one weight per edge is required")

    @classmethod
    def zero(cls, graph: Graph) -> IntegerChain:
        return cls(graph, (0,) * graph.E)

    def __add__(self, other: IntegerChain) -> IntegerChain:
        return IntegerChain(self.graph, tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other: IntegerChain) -> IntegerChain:
        return IntegerChain(self.graph, tuple(a - b for a, b in zip(self.weights, other.weights)))

    def scale(self, k: int) -> IntegerChain:
        return IntegerChain(self.graph, tuple(k * a for a in self.weights))


def is_integer_cycle(og: OrientedGraph, z: IntegerChain) -> bool:
    """Kirchhoff rule: at every vertex incoming weight equals outgoing weight."""
    balance = [0] * og.graph.V
    for e, w in enumerate(z.weights):
        balance[og.heads[e]] += w
        balance[og.tail(e)] -= w
    return not any(balance)


def signed_fundamental_cycle(og: OrientedGraph, f: SpanningForest, e: int) -> IntegerChain:
    """The fundamental cycle of ``e`` traversed along ``e``'s orientation, with signs."""
    if f.is_tree_edge(e):
        raise GraphError("edge is a tree edge")
    w = [0] * og.graph.E
    w[e] = 1
    cur = og.heads[e]
    for i in f.tree_path(og.heads[e], og.tail(e)):
        a, b = og.graph.edges[i]
        nxt = b if cur == a else a
        w[i] = og.sign(i, cur, nxt)
        cur = nxt
    return IntegerChain(og.graph, tuple(w))


def integer_extend(og: OrientedGraph, f: SpanningForest,
                   cotree_weights: Mapping[int, int]) -> IntegerChain:
    """The unique integer 1-cycle with the given weights on the non-tree edges."""
    g = og.graph
    if g.V and components(g)[0] != 1:
        raise GraphError("graph is disconnected; extend each component separately")
    bad = [e for e in cotree_weights if f.is_tree_edge(e)]
    if bad:
        raise GraphError(f"weights given on tree edges {bad}")
    total = IntegerChain.zero(g)
    for e in f.cotree_edges:
        k = int(cotree_weights.get(e, 0))
        if k:
            total = total + signed_fundamental_cycle(og, f, e).scale(k)
    return total


def reorientation_iso(og1: OrientedGraph, og2: OrientedGraph, z: IntegerChain) -> IntegerChain:
    """Carry a chain for orientation ``og1`` to ``og2`` by negating re-oriented edges."""
    if og1.graph != og2.graph or z.graph != og1.graph:
        raise GraphError("orientations and chain must share one graph")
    return IntegerChain(z.graph, tuple(-w if h1 != h2 else w
                                       for w, h1, h2 in zip(z.weights, og1.heads, og2.heads)))


# sign assignments up to vertex flips ----------------------------------------


@dataclass(frozen=True)
class SignAssignment:
    graph: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.graph.E or any(s not in (1, -1) for s in self.signs):
            raise GraphError("signs must be +1/-1, one per edge")

    def flip(self, v: int) -> SignAssignment:
        """Invert the sign of every edge containing ``v``."""
        return SignAssignment(self.graph, tuple(-s if v in e else s
                                                for s, e in zip(self.signs, self.graph.edges)))


def sign_canonical_form(s: SignAssignment, f: SpanningForest | None = None) -> SignAssignment:
    """Representative of the flip orbit of ``s`` with every tree edge positive.

    Vertices are visited root-first (root 0); a vertex is flipped when the
    edge to its parent is negative. Flipping a vertex never touches edges
    between vertices already visited, so each tree edge ends up positive.
    """
    g = s.graph
    f = f or spanning_forest(g)
    if g.V and f.component_count != 1:
        raise GraphError("graph is disconnected")
    cur = s
    for v in f.order:
        e = f.parent_edge[v]
        if e >= 0 and cur.signs[e] < 0:
            cur = cur.flip(v)
    return cur


def sign_class_count_bruteforce(g: Graph) -> int:
    """Number of flip orbits among all ``2**E`` assignments, by union-find."""
    E = g.E
    if E > 20:
        raise ValueError("too many edges for exhaustive orbit enumeration")
    masks = []
    for v in range(g.V):
        m = 0
        for i, e in enumerate(g.edges):
            if v in e:
                m |= 1 << i
        masks.append(m)
    parent = list(range(1 << E))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for state in range(1 << E):
        for m in masks:
            a, b = find(state), find(state ^ m)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return sum(1 for x in range(1 << E) if find(x) == x)


def all_sign_assignments(g: Graph):
    for signs in product((1, -1), repeat=g.E):
        yield SignAssignment(g, signs)
