"""Exhaustive enumeration of small graphs up to isomorphism.

Connected graphs on ``n`` vertices are grown from those on ``n - 1`` by adding
a vertex joined to a non-empty subset of the old vertices: every connected
graph has a non-cut vertex whose removal leaves a connected graph, and the
degree cap is hereditary, so nothing is missed. Isomorphic duplicates are
removed with a canonical form from individualisation-refinement.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .blocks import is_very_nice_cactus
from .graph import Graph, disjoint_union


def _refine(adj, colours):
    """Colour refinement; colours are canonical ranks, cells only ever split in place."""
    ncol = len(set(colours))
    while True:
        sig = [(colours[v], tuple(sorted(colours[w] for w in adj[v]))) for v in range(len(adj))]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        colours = [palette[s] for s in sig]
        if len(palette) == ncol:
            return colours
        ncol = len(palette)


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant certificate: the least relabelled edge list over the
    leaves of an individualisation-refinement search tree."""
    adj = g.adj
    best = None

    def search(colours):
        nonlocal best
        if len(set(colours)) == g.n:
            cert = tuple(sorted((min(colours[u], colours[v]), max(colours[u], colours[v])) for u, v in g.edges))
            if best is None or cert < best:
                best = cert
            return
        sizes: dict[int, int] = {}
        for c in colours:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((k for k, s in sizes.items() if s > 1), key=lambda k: (sizes[k], k))
        for v in range(g.n):
            if colours[v] != target:
                continue
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colours)]
            search(_refine(adj, split))

    search(_refine(adj, [len(a) for a in adj]))
    return (g.n, best or ())


class IsoSet:
    """Collects graphs, keeping one representative per isomorphism class."""

    def __init__(self):
        self._seen: set[tuple] = set()
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        key = canonical_form(g)
        if key in self._seen:
            return False
        self._seen.add(key)
        self.graphs.append(g)
        return True


@lru_cache(maxsize=None)
def connected_graphs(n: int, max_degree: int | None = None) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices (max degree <= ``max_degree``), up to isomorphism."""
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1),)
    seen = IsoSet()
    cap = max_degree if max_degree is not None else n
    for g in connected_graphs(n - 1, max_degree):
        free = [v for v in range(g.n) if g.degree(v) < cap]
        for k in range(1, min(cap, len(free)) + 1):
            for nbrs in combinations(free, k):
                seen.add(Graph(n, list(g.edges) + [(v, n - 1) for v in nbrs]))
    return tuple(sorted(seen.graphs, key=lambda h: (h.m, h.sorted_edges())))


def connected_graphs_upto(max_n: int, max_degree: int | None = None):
    for n in range(1, max_n + 1):
        yield from connected_graphs(n, max_degree)


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, as multisets of connected components."""
    out = []
    for sizes in _partitions(n, n):
        groups: dict[int, int] = {}
        for s in sizes:
            groups[s] = groups.get(s, 0) + 1
        choices = [list(combinations_with_replacement(range(len(connected_graphs(s))), c))
                   for s, c in sorted(groups.items())]
        keys = sorted(groups.items())

        def rec(i, acc):
            if i == len(keys):
                out.append(disjoint_union(*acc) if acc else Graph(0))
                return
            s, _ = keys[i]
            for combo in choices[i]:
                rec(i + 1, acc + [connected_graphs(s)[j] for j in combo])

        rec(0, [])
    return tuple(out)


def all_graphs_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def very_nice_cacti(max_n: int) -> tuple[Graph, ...]:
    """All very nice (subcubic) cacti on at most ``max_n`` vertices, up to isomorphism.

    Built by hanging a new cycle off any vertex of degree 2 through a bridge,
    which reaches every very nice cactus (remove a leaf cycle of the cycle tree).
    """
    levels: list[Graph] = []
    seen = IsoSet()
    frontier = []
    for k in range(3, max_n + 1):
        g = Graph(k, [(i, (i + 1) % k) for i in range(k)])
        if seen.add(g):
            frontier.append(g)
    while frontier:
        nxt = []
        for g in frontier:
            levels.append(g)
            for v in range(g.n):
                if g.degree(v) != 2:
                    continue
                for k in range(3, max_n - g.n + 1):
                    s = g.n
                    edges = list(g.edges) + [(s + i, s + (i + 1) % k) for i in range(k)] + [(v, s)]
                    h = Graph(g.n + k, edges)
                    if seen.add(h):
                        nxt.append(h)
        frontier = nxt
    assert all(is_very_nice_cactus(g) for g in levels)
    return tuple(sorted(levels, key=lambda h: (h.n, h.m, h.sorted_edges())))
