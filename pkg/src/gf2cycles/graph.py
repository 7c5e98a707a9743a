"""Finite simple graphs, standard families, spanning forests and fundamental cycles.

Vertices are ``0..V-1``. Edges are stored as ``(u, v)`` with ``u < v`` and
indexed lexicographically; every deterministic output (forests, bases,
JSON) derives from that order. Display labels follow the usual notation:
``K_n`` has labels ``1..n`` and the second part of ``K_{m,n}`` is primed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf2 import BitMatrix, BitVector


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


class Graph:
    """An immutable finite simple graph with canonical edge indexing."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None, name: str | None = None):
        if vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise GraphError(f"duplicate edge {e}")
            norm.add(e)
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        if labels is None:
            labels = [str(i) for i in range(vertex_count)]
        if len(labels) != vertex_count:
            raise GraphError("one label per vertex is required")
        self.labels = tuple(labels)
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        self.name = name or f"G(V={vertex_count}, E={len(self.edges)})"

    @property
    def V(self) -> int:
        return self.vertex_count

    @property
    def E(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph({self.name}: V={self.V}, E={self.E})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def vertex(self, v: int | str) -> int:
        """Vertex index from an index or a display label."""
        if isinstance(v, str):
            try:
                return self._label_index[v]
            except KeyError:
                raise GraphError(f"no vertex labelled {v!r}") from None
        v = int(v)
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range")
        return v

    def index(self, u: int | str, v: int | str) -> int:
        """Index of the edge ``{u, v}``."""
        a, b = self.vertex(u), self.vertex(v)
        try:
            return self.edge_index[(min(a, b), max(a, b))]
        except KeyError:
            raise GraphError(f"no edge {{{self.labels[a]}, {self.labels[b]}}}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def edge_label(self, i: int) -> str:
        u, v = self.edges[i]
        return f"{self.labels[u]}{self.labels[v]}" if all(
            len(self.labels[x]) <= 2 for x in (u, v)) else f"{self.labels[u]}-{self.labels[v]}"

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each vertex, the sorted ``(neighbor, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def edges_share_vertex(self, i: int, j: int) -> bool:
        return bool(set(self.edges[i]) & set(self.edges[j]))

    @cached_property
    def incidence(self) -> BitMatrix:
        """Vertex-by-edge incidence matrix; its kernel is the cycle space."""
        dense = np.zeros((self.vertex_count, self.E), dtype=np.uint8)
        for i, (u, v) in enumerate(self.edges):
            dense[u, i] = dense[v, i] = 1
        if self.vertex_count == 0:
            return BitMatrix(self.E)
        return BitMatrix.from_dense(dense) if self.E else BitMatrix.zeros(self.vertex_count, 0)

    # chains ---------------------------------------------------------------

    def empty(self) -> EdgeSet:
        return EdgeSet(self, BitVector.zeros(self.E))

    def edge_set(self, edges: Iterable[int | tuple]) -> EdgeSet:
        """EdgeSet from edge indices or vertex pairs (indices or labels); mod-2 multiplicity."""
        idx = []
        for e in edges:
            if isinstance(e, tuple):
                idx.append(self.index(*e))
            else:
                idx.append(int(e))
        return EdgeSet(self, BitVector.from_indices(self.E, idx))

    def all_edges(self) -> EdgeSet:
        return EdgeSet(self, BitVector.from_indices(self.E, range(self.E)))

    def walk(self, *vertices: int | str, closed: bool = True) -> EdgeSet:
        """Mod-2 sum of the edges of the walk through ``vertices``.

        A closed walk returns to the first vertex. Edges passed twice cancel,
        so e.g. ``walk(1, 2', 3, 1', 3, 2')`` is a 4-cycle, not an error.
        """
        vs = [self.vertex(v) for v in vertices]
        steps = list(zip(vs, vs[1:]))
        if closed and len(vs) > 1:
            steps.append((vs[-1], vs[0]))
        return EdgeSet(self, BitVector.from_indices(self.E, [self.index(u, v) for u, v in steps]))

    def simple_cycle(self, vertices: Sequence[int | str]) -> EdgeSet:
        """The simple cycle through the given distinct vertices."""
        vs = [self.vertex(v) for v in vertices]
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError("a simple cycle needs at least 3 pairwise distinct vertices")
        return self.walk(*vs)


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of a graph (a 1-chain over GF(2))."""

    graph: Graph
    members: BitVector

    def __post_init__(self):
        if self.members.dimension != self.graph.E:
            raise GraphError("edge set dimension does not match the graph")

    def __add__(self, other: EdgeSet) -> EdgeSet:
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphError("edge sets live in different graphs")
        return EdgeSet(self.graph, self.members + other.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members.indices())

    def __len__(self) -> int:
        return self.members.weight()

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, e: int | tuple) -> bool:
        if isinstance(e, tuple):
            e = self.graph.index(*e)
        return e in self.members

    def pairs(self) -> list[tuple[int, int]]:
        return [self.graph.edges[i] for i in self]

    def vertices(self) -> set[int]:
        return {v for e in self.pairs() for v in e}

    def labels(self) -> list[str]:
        return [self.graph.edge_label(i) for i in self]

    def __repr__(self) -> str:
        return f"EdgeSet({{{', '.join(self.labels())}}})"


def edge_sum(sets: Iterable[EdgeSet], graph: Graph) -> EdgeSet:
    total = graph.empty()
    for s in sets:
        total = total + s
    return total


# standard families ----------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                 [str(i + 1) for i in range(n)], f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """``K_{m,n}`` with part ``[m]`` at ``0..m-1`` and part ``[n]'`` at ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite(m, n) needs m, n >= 1")
    labels = [str(i + 1) for i in range(m)] + [f"{j + 1}'" for j in range(n)]
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)], labels,
                 f"K{m},{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)],
                 [str(i + 1) for i in range(n)], f"C{n}")


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], [str(i + 1) for i in range(n)], f"P{n}")


def wheel(n: int) -> Graph:
    """Hub ``0`` joined to every rim vertex ``1..n``; rim edges ``{j, j+1}`` and ``{n, 1}``."""
    if n < 3:
        raise GraphError("wheel(n) needs n >= 3")
    edges = [(0, j) for j in range(1, n + 1)]
    edges += [(j, j + 1) for j in range(1, n)] + [(1, n)]
    return Graph(n + 1, edges, [str(i) for i in range(n + 1)], f"W{n}")


def triod() -> Graph:
    """``K_{3,1}``: leaves 1, 2, 3 and centre 1'."""
    g = complete_bipartite(3, 1)
    g.name = "triod"
    return g


def tilde_complete(n: int) -> Graph:
    """``K_{n,n}`` minus the matching ``jj'``; vertex ``j'`` is index ``n + j - 1``."""
    if n < 2:
        raise GraphError("tilde_complete(n) needs n >= 2")
    labels = [str(i + 1) for i in range(n)] + [f"{j + 1}'" for j in range(n)]
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j], labels,
                 f"Ktilde{n}")


def from_edges(vertex_count: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    return Graph(vertex_count, edges, name=name)


def tree(edges: Sequence[tuple[int, int]], vertex_count: int | None = None) -> Graph:
    """A tree from its edge list; raises unless the result is connected and acyclic."""
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edges), default=0)
    g = Graph(vertex_count, edges, name="tree")
    if g.E != g.V - 1 or components(g)[0] != 1:
        raise GraphError("edge list is not a tree")
    return g


def disjoint_union(*graphs: Graph, name: str | None = None) -> Graph:
    edges, labels, offset = [], [], 0
    for k, g in enumerate(graphs):
        edges += [(u + offset, v + offset) for u, v in g.edges]
        labels += [f"{lab}.{k}" for lab in g.labels]
        offset += g.V
    return Graph(offset, edges, labels, name or "+".join(g.name for g in graphs))


def add_edges(g: Graph, extra: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    return Graph(g.V, list(g.edges) + list(extra), g.labels, name or g.name)


def random_tree(rng, vertex_count: int) -> Graph:
    """Uniform attachment tree; ``rng`` is a :class:`random.Random`."""
    edges = [(rng.randrange(v), v) for v in range(1, vertex_count)]
    return Graph(vertex_count, edges, name=f"rtree{vertex_count}")


def random_connected_graph(rng, vertex_count: int, edge_count: int) -> Graph:
    """A random spanning tree plus distinct extra edges, ``edge_count`` in total."""
    top = vertex_count * (vertex_count - 1) // 2
    if not vertex_count - 1 <= edge_count <= top:
        raise GraphError("edge count out of range for a connected simple graph")
    base = set(random_tree(rng, vertex_count).edges)
    rest = [(u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)
            if (u, v) not in base]
    extra = rng.sample(rest, edge_count - len(base))
    return Graph(vertex_count, sorted(base) + extra, name=f"rg{vertex_count},{edge_count}")


_FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "wheel": wheel,
    "triod": triod,
    "tilde_complete": tilde_complete,
    "tree": tree,
}


def make_standard(family: str, *params) -> Graph:
    """Dispatch to a named family, e.g. ``make_standard("wheel", 4)``."""
    try:
        build = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown graph family {family!r}") from None
    return build(*params)


# components and forests -----------------------------------------------------


def components(g: Graph) -> tuple[int, list[int]]:
    """Number of connected components and a component id per vertex."""
    comp = [-1] * g.V
    count = 0
    for s in range(g.V):
        if comp[s] >= 0:
            continue
        comp[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, _ in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = count
                    queue.append(w)
        count += 1
    return count, comp


class SpanningForest:
    """Greedy maximal forest: edges are scanned by index and kept unless they close a cycle.

    Each component is rooted at its smallest vertex; ``parent_edge`` and
    ``depth`` describe the rooted tree and drive tree-path queries.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        parent = list(range(graph.V))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree = []
        for i, (u, v) in enumerate(graph.edges):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
                tree.append(i)
        self.tree_edges: tuple[int, ...] = tuple(tree)
        self._tree_set = frozenset(tree)
        self.cotree_edges: tuple[int, ...] = tuple(i for i in range(graph.E) if i not in self._tree_set)
        self.component_count, self.component_of = components(graph)

        self.parent_edge = [-1] * graph.V
        self.parent = [-1] * graph.V
        self.depth = [0] * graph.V
        self.order: list[int] = []
        tadj: list[list[tuple[int, int]]] = [[] for _ in range(graph.V)]
        for i in tree:
            u, v = graph.edges[i]
            tadj[u].append((v, i))
            tadj[v].append((u, i))
        seen = [False] * graph.V
        for root in range(graph.V):
            if seen[root]:
                continue
            seen[root] = True
            queue = deque([root])
            while queue:
                u = queue.popleft()
                self.order.append(u)
                for w, i in sorted(tadj[u]):
                    if not seen[w]:
                        seen[w] = True
                        self.parent[w] = u
                        self.parent_edge[w] = i
                        self.depth[w] = self.depth[u] + 1
                        queue.append(w)

    def is_tree_edge(self, e: int) -> bool:
        return e in self._tree_set

    @property
    def tree(self) -> EdgeSet:
        return self.graph.edge_set(self.tree_edges)

    def tree_path(self, u: int, v: int) -> list[int]:
        """Edge indices of the unique tree path from ``u`` to ``v``, in walking order."""
        if self.component_of[u] != self.component_of[v]:
            raise GraphError(f"vertices {u} and {v} lie in different components")
        up, down = [], []
        while self.depth[u] > self.depth[v]:
            up.append(self.parent_edge[u])
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            down.append(self.parent_edge[v])
            v = self.parent[v]
        while u != v:
            up.append(self.parent_edge[u])
            u = self.parent[u]
            down.append(self.parent_edge[v])
            v = self.parent[v]
        return up + down[::-1]


def spanning_forest(g: Graph) -> SpanningForest:
    return SpanningForest(g)


def fundamental_cycle(f: SpanningForest, e: int) -> EdgeSet:
    """The simple cycle formed by non-tree edge ``e`` and the tree path joining its ends."""
    if f.is_tree_edge(e):
        raise GraphError(f"edge {f.graph.edge_label(e)} is a tree edge")
    u, v = f.graph.edges[e]
    return f.graph.edge_set([e, *f.tree_path(u, v)])


# involutions ----------------------------------------------------------------


class Involution:
    """A vertex permutation of order at most two that maps edges to edges."""

    def __init__(self, graph: Graph, image: Sequence[int]):
        image = tuple(int(x) for x in image)
        if len(image) != graph.V or sorted(image) != list(range(graph.V)):
            raise GraphError("involution image must be a permutation of the vertices")
        if any(image[image[v]] != v for v in range(graph.V)):
            raise GraphError("map is not an involution")
        perm = []
        for u, v in graph.edges:
            a, b = image[u], image[v]
            if not graph.has_edge(a, b):
                raise GraphError("map does not preserve edges")
            perm.append(graph.index(a, b))
        self.graph = graph
        self.image = image
        self.edge_image = tuple(perm)

    @classmethod
    def identity(cls, graph: Graph) -> Involution:
        return cls(graph, range(graph.V))

    @classmethod
    def part_swap(cls, graph: Graph) -> Involution:
        """Swap ``j`` and ``j'`` on a graph with parts ``0..n-1`` and ``n..2n-1``."""
        if graph.V % 2:
            raise GraphError("part swap needs an even vertex count")
        n = graph.V // 2
        return cls(graph, [v + n if v < n else v - n for v in range(graph.V)])

    def __call__(self, c: EdgeSet) -> EdgeSet:
        return apply_involution(self, c)

    @cached_property
    def edge_matrix(self) -> BitMatrix:
        """Permutation matrix of the induced map on edges (row i = image of edge i)."""
        return BitMatrix.from_rows(
            [BitVector.unit(self.graph.E, j) for j in self.edge_image], self.graph.E)


def apply_involution(t: Involution, c: EdgeSet) -> EdgeSet:
    if c.graph != t.graph:
        raise GraphError("edge set is not on the involution's graph")
    return t.graph.edge_set([t.edge_image[i] for i in c])


# edge-list text format ------------------------------------------------------


def parse_edge_list(text: str, name: str | None = None) -> Graph:
    """Parse ``V <count>`` followed by one ``u v`` pair per line (0-based, ``#`` comments)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "V":
        raise GraphError("first line must be 'V <count>'")
    try:
        n = int(head[1])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise GraphError(str(exc)) from None
    return Graph(n, edges, name=name)


def read_edge_list(path: str | Path) -> Graph:
    p = Path(path)
    return parse_edge_list(p.read_text(), name=p.stem)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"V {g.V}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"
