"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``. Every operation that "modifies" a graph returns a new
one; derived subgraphs carry a back-map to the vertex ids of their parent.
"""

from __future__ import annotations

import hashlib
from collections import deque
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import GraphParseError, ValidationError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with optional per-vertex text labels."""

    __slots__ = ("n", "edges", "adj", "labels", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Mapping[int, str] | None = None):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        es = set()
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(_norm(u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.labels: dict[int, str] = dict(labels) if labels else {}

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs -------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled to 0..k-1, with back-map."""
        back = sorted(set(vertices))
        index = {v: i for i, v in enumerate(back)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = {index[v]: s for v, s in self.labels.items() if v in index}
        return Graph(len(back), edges, labels), back

    def edge_subgraph(self, vertices: Iterable[int], edges: Iterable[Edge]) -> tuple["Graph", list[int]]:
        back = sorted(set(vertices))
        index = {v: i for i, v in enumerate(back)}
        es = [(index[u], index[v]) for u, v in edges]
        labels = {index[v]: s for v, s in self.labels.items() if v in index}
        return Graph(len(back), es, labels), back

    def remove_vertices(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(removed)
        return self.induced(v for v in range(self.n) if v not in gone)

    def remove_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        gone = {_norm(e[0], e[1]) for e in removed}
        return Graph(self.n, (e for e in self.edges if e not in gone), self.labels)

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in extra], self.labels)

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Apply a vertex permutation: old vertex v becomes ``mapping[v]``."""
        return Graph(self.n, ((mapping[u], mapping[v]) for u, v in self.edges),
                     {mapping[v]: s for v, s in self.labels.items()})

    # -- traversal --------------------------------------------------------

    def bfs_distances(self, source: int, allowed: set[int] | None = None) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist and (allowed is None or w in allowed):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def component_sets(self, allowed: Iterable[int] | None = None) -> list[list[int]]:
        """Vertex sets of connected components (of the subgraph induced by ``allowed``)."""
        pool = set(range(self.n)) if allowed is None else set(allowed)
        seen: set[int] = set()
        out = []
        for s in sorted(pool):
            if s in seen:
                continue
            comp = self.bfs_distances(s, pool)
            seen.update(comp)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.bfs_distances(0)) == self.n

    def is_forest(self, removed: Iterable[int] = ()) -> bool:
        """True iff the graph minus ``removed`` has no cycle."""
        gone = set(removed)
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if u in gone or v in gone:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def is_independent(self, vs: Iterable[int]) -> bool:
        s = set(vs)
        return not any(u in s and v in s for u, v in self.edges)

    # -- kernels' view ----------------------------------------------------

    @cached_property
    def masks(self) -> np.ndarray:
        """Neighbour bitmasks as int64 (requires n <= 62)."""
        if self.n > 62:
            raise ValidationError("bitmask view needs n <= 62")
        out = np.zeros(self.n, dtype=np.int64)
        for v, nb in enumerate(self.adj):
            m = 0
            for w in nb:
                m |= 1 << w
            out[v] = m
        return out

    @cached_property
    def edge_array(self) -> np.ndarray:
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array(self.sorted_edges(), dtype=np.int64)

    # -- serialisation ------------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]

    def to_dot(self) -> str:
        body = "".join(f"  {u} -- {v};\n" for u, v in self.sorted_edges())
        isolated = "".join(f"  {v};\n" for v in range(self.n) if not self.adj[v])
        return "graph G {\n" + isolated + body + "}\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: vertex count, then ``u v`` lines; ``#`` comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphParseError("first line must be a non-negative vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing vertex count")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_text())


def disjoint_union(*graphs: Graph) -> Graph:
    edges, labels, off = [], {}, 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        labels.update({v + off: s for v, s in g.labels.items()})
        off += g.n
    return Graph(off, edges, labels)


def connected_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Components as (graph, back-map) pairs, ordered by smallest original vertex."""
    return [g.induced(c) for c in g.component_sets()]


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` new internal vertices.

    Original vertices keep their ids; new vertices are appended edge by edge in
    sorted edge order.
    """
    if k < 1:
        raise ValidationError("subdivision count must be >= 1")
    edges = []
    nxt = g.n
    for u, v in g.sorted_edges():
        path = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        edges.extend(zip(path, path[1:]))
    return Graph(nxt, edges, g.labels)
