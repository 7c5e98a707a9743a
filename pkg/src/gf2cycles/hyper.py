"""Mod-2 cycles of 3-uniform hypergraphs, simplicial d-cycles and rook cycles.

Vertices are 0-based; the "apex" used by the decompositions is the highest
vertex ``n - 1`` (respectively the coordinate value ``n - 1`` on a grid).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .gf2 import BitMatrix, BitVector, kernel_basis, rank
from .graph import Graph, components, complete_bipartite

Simplex = tuple[int, ...]


class HypergraphError(ValueError):
    pass


class NotACycleError(ValueError):
    pass


# general simplicial chains -------------------------------------------------


def chain(simplices: Iterable[Iterable[int]]) -> frozenset[Simplex]:
    """Mod-2 sum of simplices given as vertex collections."""
    out: set[Simplex] = set()
    for s in simplices:
        out ^= {tuple(sorted(s))}
    return frozenset(out)


def faces_of(s: Simplex) -> list[Simplex]:
    """The codimension-one faces of a simplex."""
    return [s[:i] + s[i + 1:] for i in range(len(s))]


def boundary(c: Iterable[Simplex]) -> frozenset[Simplex]:
    return chain(f for s in c for f in faces_of(s))


def is_d_cycle(c: Iterable[Simplex], d: int) -> bool:
    """Every ``d``-subset lies in an even number of the ``(d+1)``-subsets of ``c``."""
    c = list(c)
    if any(len(s) != d + 1 for s in c):
        raise HypergraphError(f"chain members must have {d + 1} vertices")
    cover = Counter(f for s in c for f in faces_of(tuple(sorted(s))))
    return all(m % 2 == 0 for m in cover.values())


def d_cycle_decompose(c: Iterable[Simplex], d: int, n: int) -> list[Simplex]:
    """``(d+2)``-subsets whose boundaries sum to the ``d``-cycle ``c`` on ``0..n-1``.

    Every member avoiding the apex ``n - 1`` is coned to the apex; the rest
    of ``c`` is forced to vanish because a cycle whose members all contain
    the apex is empty.
    """
    c = chain(c)
    if any(v < 0 or v >= n for s in c for v in s):
        raise HypergraphError("vertex out of range")
    if not is_d_cycle(c, d):
        raise NotACycleError(f"not a {d}-cycle")
    apex = n - 1
    out = sorted(s + (apex,) for s in c if apex not in s)
    if boundary(out) != c:
        raise AssertionError("cone decomposition does not re-sum")
    return out


# 3-uniform hypergraphs ------------------------------------------------------


class Hypergraph2:
    """A vertex count and a set of distinct 3-element faces."""

    def __init__(self, vertex_count: int, faces: Iterable[Iterable[int]], name: str | None = None):
        self.vertex_count = int(vertex_count)
        seen: set[Simplex] = set()
        for f in faces:
            t = tuple(sorted(int(x) for x in f))
            if len(t) != 3 or len(set(t)) != 3:
                raise HypergraphError(f"face {f} is not a 3-element set")
            if t[0] < 0 or t[2] >= self.vertex_count:
                raise HypergraphError(f"face {f} out of range")
            if t in seen:
                raise HypergraphError(f"duplicate face {f}")
            seen.add(t)
        self.faces: tuple[Simplex, ...] = tuple(sorted(seen))
        self.face_index = {f: i for i, f in enumerate(self.faces)}
        self.name = name

    def __repr__(self) -> str:
        return f"Hypergraph2(V={self.vertex_count}, F={len(self.faces)})"

    @property
    def V(self) -> int:
        return self.vertex_count

    @property
    def F(self) -> int:
        return len(self.faces)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """2-subsets of faces."""
        return tuple(sorted({p for f in self.faces for p in combinations(f, 2)}))

    @cached_property
    def skeleton(self) -> Graph:
        return Graph(self.vertex_count, self.edges)

    @cached_property
    def face_boundaries(self) -> BitMatrix:
        """Row per face: its three edges, as a vector over :attr:`edges`."""
        idx = {e: i for i, e in enumerate(self.edges)}
        rows = [BitVector.from_indices(len(self.edges), [idx[p] for p in combinations(f, 2)])
                for f in self.faces]
        return BitMatrix.from_rows(rows, len(self.edges))

    def face_set(self, faces: Iterable[Iterable[int]]) -> FaceSet:
        idx = []
        for f in faces:
            t = tuple(sorted(f))
            if t not in self.face_index:
                raise HypergraphError(f"{t} is not a face")
            idx.append(self.face_index[t])
        return FaceSet(self, BitVector.from_indices(self.F, idx))

    def empty(self) -> FaceSet:
        return FaceSet(self, BitVector.zeros(self.F))


@dataclass(frozen=True)
class FaceSet:
    hypergraph: Hypergraph2
    members: BitVector

    def __add__(self, other: FaceSet) -> FaceSet:
        if other.hypergraph is not self.hypergraph:
            raise HypergraphError("face sets of different hypergraphs")
        return FaceSet(self.hypergraph, self.members + other.members)

    def faces(self) -> list[Simplex]:
        return [self.hypergraph.faces[i] for i in self.members]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return self.members.weight()

    def __bool__(self) -> bool:
        return bool(self.members)


def complete_hypergraph(n: int) -> Hypergraph2:
    return Hypergraph2(n, combinations(range(n), 3), name=f"[{n}]")


def tetrahedron(h: Hypergraph2, a: Iterable[int]) -> FaceSet:
    a = tuple(sorted(a))
    if len(a) != 4:
        raise HypergraphError("a tetrahedron needs four vertices")
    return h.face_set(combinations(a, 3))


def is_2cycle(c: FaceSet) -> bool:
    return is_d_cycle(c.faces(), 2)


def decompose_tetrahedra(c: FaceSet) -> list[Simplex]:
    """4-subsets (all through the top vertex) whose tetrahedra sum to ``c``."""
    return d_cycle_decompose(c.faces(), 2, c.hypergraph.vertex_count)


def decompose_relation(r: Iterable[Iterable[int]], n: int) -> list[Simplex]:
    """5-subsets whose tetrahedron relations sum to the relation ``r`` of 4-subsets."""
    return d_cycle_decompose(r, 3, n)


def pentachoron_relation(a: Iterable[int]) -> frozenset[Simplex]:
    """Mod-2 sum of the five tetrahedra ``T_{A - j}``, as 3-subsets."""
    a = tuple(sorted(a))
    total: frozenset[Simplex] = frozenset()
    for t in faces_of(a):
        total = total ^ chain(combinations(t, 3))
    return total


def pair_incidence(h: Hypergraph2) -> BitMatrix:
    """Rows = all vertex pairs, columns = faces."""
    pairs = list(combinations(range(h.vertex_count), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    cols = [[idx[p] for p in combinations(f, 2)] for f in h.faces]
    rows = [[] for _ in pairs]
    for j, ps in enumerate(cols):
        for i in ps:
            rows[i].append(j)
    return BitMatrix.from_rows([BitVector.from_indices(h.F, r) for r in rows], h.F)


def two_cycle_basis(h: Hypergraph2) -> BitMatrix:
    return kernel_basis(pair_incidence(h)) if h.F else BitMatrix(0)


@dataclass
class TwoCycleCount:
    n: int
    dimension: int
    kernel_rank: int

    @property
    def count(self) -> int:
        return 1 << self.dimension


def count_2cycles(n: int) -> TwoCycleCount:
    """Dimension of 2-cycles on ``[n]``: tetrahedra through the top vertex, and the raw kernel."""
    if n < 3:
        raise HypergraphError("n must be at least 3")
    h = complete_hypergraph(n)
    tets = [tetrahedron(h, s + (n - 1,)).members for s in combinations(range(n - 1), 3)]
    dim = rank(BitMatrix.from_rows(tets, h.F)) if tets else 0
    return TwoCycleCount(n, dim, two_cycle_basis(h).nrows)


# Betti numbers ---------------------------------------------------------------


@dataclass
class BettiProfile:
    b0: int
    b1: int
    b2: int
    V: int
    E: int
    F: int

    @property
    def euler_holds(self) -> bool:
        return self.b0 - self.b1 + self.b2 == self.V - self.E + self.F

    def as_tuple(self) -> tuple[int, ...]:
        return (self.b0, self.b1, self.b2, self.V, self.E, self.F)


def betti_profile(h: Hypergraph2) -> BettiProfile:
    g = h.skeleton
    b0 = components(g)[0]
    cycles = g.E - g.V + b0
    fb = h.face_boundaries
    r = rank(fb) if h.F else 0
    return BettiProfile(b0, cycles - r, h.F - r, h.V, g.E, h.F)


def is_connected(h: Hypergraph2) -> bool:
    return components(h.skeleton)[0] == 1


def torus7() -> Hypergraph2:
    """The 7-vertex triangulation of the torus: faces {i,i+1,i+3} and {i,i+2,i+3} mod 7."""
    faces = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    faces += [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return Hypergraph2(7, faces, name="torus7")


@dataclass
class WitnessPair:
    first: Hypergraph2
    second: Hypergraph2
    first_profile: BettiProfile
    second_profile: BettiProfile


def is_witness_pair(h1: Hypergraph2, h2: Hypergraph2) -> bool:
    """Both connected, same (V, E, F), different numbers of 2-cycles."""
    if h1.vertex_count == h2.vertex_count and h1.faces == h2.faces:
        return False
    if not (is_connected(h1) and is_connected(h2)):
        return False
    p1, p2 = betti_profile(h1), betti_profile(h2)
    return (p1.V, p1.E, p1.F) == (p2.V, p2.E, p2.F) and p1.b2 != p2.b2


def find_witness_pair(max_vertices: int = 7, max_candidates: int = 200_000) -> WitnessPair | None:
    """Smallest-first search for two connected hypergraphs with equal (V, E, F)
    and different 2-cycle counts.  Returns None when the bound is exhausted."""
    seen = 0
    for v in range(3, max_vertices + 1):
        universe = list(combinations(range(v), 3))
        for f in range(1, len(universe) + 1):
            by_edges: dict[int, tuple[Hypergraph2, int]] = {}
            for faces in combinations(universe, f):
                seen += 1
                if seen > max_candidates:
                    return None
                h = Hypergraph2(v, faces)
                if not is_connected(h):
                    continue
                p = betti_profile(h)
                prev = by_edges.get(p.E)
                if prev is None:
                    by_edges[p.E] = (h, p.b2)
                elif prev[1] != p.b2:
                    a = prev[0]
                    return WitnessPair(a, h, betti_profile(a), p)
    return None


# text format -------------------------------------------------------------------


def parse_hypergraph(text: str, name: str | None = None) -> Hypergraph2:
    """``V <count>`` then one ``a b c`` face per line (0-based, ``#`` comments)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise HypergraphError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "V" or not head[1].isdigit():
        raise HypergraphError("first line must be 'V <count>'")
    faces = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise HypergraphError(f"bad face line: {ln!r}")
        try:
            faces.append(tuple(int(x) for x in parts))
        except ValueError:
            raise HypergraphError(f"bad face line: {ln!r}") from None
    return Hypergraph2(int(head[1]), faces, name=name)


def read_hypergraph(path: str | Path) -> Hypergraph2:
    p = Path(path)
    return parse_hypergraph(p.read_text(), name=p.stem)


def format_hypergraph(h: Hypergraph2) -> str:
    return "\n".join([f"V {h.vertex_count}"] + [f"{a} {b} {c}" for a, b, c in h.faces]) + "\n"


# rook cycles -----------------------------------------------------------------

Cell = tuple[int, ...]
Box = tuple[tuple[int, int], ...]  # one sorted pair per coordinate


class RookGrid:
    """The grid ``{0..n-1}^ℓ`` with mixed-radix cell indices."""

    def __init__(self, n: int, ell: int):
        if n < 1 or ell < 1:
            raise HypergraphError("grid needs n >= 1 and ell >= 1")
        self.n = n
        self.ell = ell
        self.size = n ** ell

    def __repr__(self) -> str:
        return f"RookGrid(n={self.n}, ell={self.ell})"

    def index(self, cell: Sequence[int]) -> int:
        k = 0
        for x in cell:
            if not 0 <= x < self.n:
                raise HypergraphError(f"cell {tuple(cell)} outside the grid")
            k = k * self.n + x
        return k

    def cell(self, k: int) -> Cell:
        out = []
        for _ in range(self.ell):
            k, r = divmod(k, self.n)
            out.append(r)
        return tuple(reversed(out))

    def cells(self) -> Iterable[Cell]:
        return product(range(self.n), repeat=self.ell)

    def lines(self) -> list[list[Cell]]:
        out = []
        for axis in range(self.ell):
            for rest in product(range(self.n), repeat=self.ell - 1):
                out.append([rest[:axis] + (x,) + rest[axis:] for x in range(self.n)])
        return out

    @cached_property
    def line_incidence(self) -> BitMatrix:
        rows = [BitVector.from_indices(self.size, [self.index(c) for c in ln]) for ln in self.lines()]
        return BitMatrix.from_rows(rows, self.size)

    def parallelepiped(self, box: Sequence[Sequence[int]]) -> frozenset[Cell]:
        if len(box) != self.ell or any(len(set(p)) != 2 for p in box):
            raise HypergraphError("a parallelepiped needs one 2-element set per coordinate")
        return frozenset(product(*box))

    def apex_box(self, a: Sequence[int]) -> Box:
        top = self.n - 1
        return tuple(tuple(sorted((top, x))) for x in a)


def is_rook_cycle(s: Iterable[Cell], grid: RookGrid) -> bool:
    cover: Counter = Counter()
    for c in s:
        grid.index(c)
        for axis in range(grid.ell):
            cover[(axis, c[:axis] + c[axis + 1:])] += 1
    return all(m % 2 == 0 for m in cover.values())


def rook_cycle_dimension(grid: RookGrid) -> int:
    return kernel_basis(grid.line_incidence).nrows


def decompose_parallelepipeds(s: Iterable[Cell], grid: RookGrid) -> list[Cell]:
    """Cells ``a`` avoiding the top value; the boxes ``{top, a_i}`` over them sum to ``s``."""
    s = frozenset(s)
    if not is_rook_cycle(s, grid):
        raise NotACycleError("not a rook cycle")
    top = grid.n - 1
    base = sorted(a for a in s if top not in a)
    total: frozenset[Cell] = frozenset()
    for a in base:
        total = total ^ grid.parallelepiped(grid.apex_box(a))
    if total != s:
        raise AssertionError("parallelepiped decomposition does not re-sum")
    return base


@dataclass(frozen=True)
class BoxRelation:
    """``P × {a,b} + P × {b,c} + P × {c,a} = 0`` with the pair in coordinate ``axis``."""

    rest: Box
    axis: int
    triple: tuple[int, int, int]

    def boxes(self) -> list[Box]:
        a, b, c = self.triple
        pairs = [tuple(sorted(p)) for p in ((a, b), (b, c), (c, a))]
        return [self.rest[:self.axis] + (p,) + self.rest[self.axis:] for p in pairs]


def _norm_box(box: Sequence[Sequence[int]]) -> Box:
    out = tuple(tuple(sorted(p)) for p in box)
    if any(len(set(p)) != 2 for p in out):
        raise HypergraphError("box coordinates must be 2-element sets")
    return out


def box_sum(boxes: Iterable[Box], grid: RookGrid) -> frozenset[Cell]:
    total: frozenset[Cell] = frozenset()
    for b in boxes:
        total = total ^ grid.parallelepiped(b)
    return total


def relation_measure(r: Iterable[Box], grid: RookGrid) -> tuple[int, ...]:
    """Per coordinate, the number of boxes whose pair there avoids the top value."""
    top = grid.n - 1
    r = list(r)
    return tuple(sum(1 for b in r if top not in b[i]) for i in range(grid.ell))


def _as_single_relation(members: set[Box]) -> BoxRelation | None:
    """The family itself when it is exactly one three-term relation."""
    if len(members) != 3:
        return None
    boxes = sorted(members)
    for axis in range(len(boxes[0])):
        rests = {b[:axis] + b[axis + 1:] for b in boxes}
        if len(rests) != 1:
            continue
        values = sorted({x for b in boxes for x in b[axis]})
        if len(values) == 3:
            rel = BoxRelation(rests.pop(), axis, tuple(values))
            if set(rel.boxes()) == members:
                return rel
    return None


def decompose_parallelepiped_relation(r: Iterable[Sequence[Sequence[int]]],
                                      grid: RookGrid) -> list[BoxRelation]:
    """Reduce a zero-sum family of boxes to nothing by three-term relations.

    Each step takes a box whose first coordinate pair ``{a, b}`` avoiding the
    top value ``c`` is leftmost, and replaces it with the boxes with
    ``{b, c}`` and ``{a, c}`` there.  The per-coordinate measure drops
    lexicographically.  What remains are boxes ``P(a)``, which are
    independent, so the remainder must be empty.
    """
    members: set[Box] = set()
    for b in r:
        members ^= {_norm_box(b)}
    if box_sum(members, grid):
        raise NotACycleError("family of boxes does not sum to zero")
    top = grid.n - 1
    single = _as_single_relation(members)
    if single is not None:
        return [single]
    steps: list[BoxRelation] = []

    def dirty(b: Box) -> int:
        for i, p in enumerate(b):
            if top not in p:
                return i
        return grid.ell

    while True:
        pending = [b for b in members if dirty(b) < grid.ell]
        if not pending:
            break
        b = min(pending, key=lambda x: (dirty(x), x))
        i = dirty(b)
        rel = BoxRelation(b[:i] + b[i + 1:], i, (b[i][0], b[i][1], top))
        for x in rel.boxes():
            members ^= {x}
        steps.append(rel)
    if members:
        raise AssertionError("apex boxes left over in a zero-sum family")
    return steps


def knn_edges_to_rook(c) -> frozenset[Cell]:
    """Edge ``a b'`` of ``K_{n,n}`` to grid cell ``(a, b)``."""
    g = c.graph
    n = g.V // 2
    return frozenset((u, v - n) for u, v in c.pairs())


def rook_to_knn_edges(s: Iterable[Cell], n: int):
    g = complete_bipartite(n, n)
    return g.edge_set([(a, b + n) for a, b in s])


# helpers for tests and the CLI ------------------------------------------------


def random_hypergraph(rng, vertex_count: int, face_count: int) -> Hypergraph2:
    universe = list(combinations(range(vertex_count), 3))
    face_count = min(face_count, len(universe))
    pick = rng.sample(range(len(universe)), face_count)
    return Hypergraph2(vertex_count, [universe[i] for i in pick])


def simplices_to_faceset(h: Hypergraph2, simplices: Iterable[Simplex]) -> FaceSet:
    return h.face_set(simplices)


def expected_two_cycle_dimension(n: int) -> int:
    return comb(n - 1, 3)

