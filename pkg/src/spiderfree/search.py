"""Exact branching engines for (independent) feedback vertex set.

Two deliberately different searches:

* :func:`hub_branch` branches in/out on undecided vertices of degree >= 3 and
  finishes exactly once only degree-2 chains are left (each chain behaves like
  one deletable edge between forbidden "hub" vertices).
* :func:`cycle_branch` picks a shortest cycle and branches on which of its
  undecided vertices is the first one taken, pruning with a disjoint cycle
  packing bound.

Both accept ``independent=True``, in which case taking a vertex forbids its
neighbours.
"""

from __future__ import annotations

import math
from collections import deque

from .graph import Graph

Adj = dict[int, set[int]]


def _copy(adj: Adj) -> Adj:
    return {v: set(nb) for v, nb in adj.items()}


def _delete(adj: Adj, v: int) -> None:
    for w in adj.pop(v):
        adj[w].discard(v)


def _peel(adj: Adj) -> None:
    """Drop vertices of degree <= 1 until none is left; they lie on no cycle."""
    queue = [v for v, nb in adj.items() if len(nb) <= 1]
    while queue:
        v = queue.pop()
        if v not in adj or len(adj[v]) > 1:
            continue
        for w in adj.pop(v):
            adj[w].discard(v)
            if len(adj[w]) <= 1:
                queue.append(w)


def _components(adj: Adj) -> int:
    seen: set[int] = set()
    count = 0
    for s in adj:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def _cyclomatic(adj: Adj) -> int:
    m = sum(len(nb) for nb in adj.values()) // 2
    return m - len(adj) + _components(adj)


def _forbidden_forest(adj: Adj, forbidden: set[int]) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in adj:
        if v not in forbidden:
            continue
        for w in adj[v]:
            if w in forbidden and v < w:
                a, b = find(v), find(w)
                if a == b:
                    return False
                parent[a] = b
    return True


def _cyclomatic_bound(adj: Adj, forbidden: set[int]) -> int | None:
    """Lower bound ceil(cyc / (maxdeg - 1)) over undecided vertices; None if infeasible."""
    cyc = _cyclomatic(adj)
    if cyc == 0:
        return 0
    top = max((len(nb) for v, nb in adj.items() if v not in forbidden), default=0)
    if top < 2:
        return None
    return math.ceil(cyc / (top - 1))


def shortest_cycle(adj: Adj) -> list[int] | None:
    """A shortest cycle (as a vertex list) of the graph, ties to the lowest start."""
    best: list[int] | None = None
    for s in sorted(adj):
        if best is not None and len(best) == 3:
            break
        dist = {s: 0}
        par = {s: -1}
        queue = deque([s])
        found = None
        while queue and found is None:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for w in sorted(adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    queue.append(w)
                elif w != par[v] and dist[w] >= dist[v]:
                    found = (v, w)
                    break
        if found is None:
            continue
        v, w = found
        left, right = [v], [w]
        while left[-1] != right[-1]:
            a, b = left[-1], right[-1]
            if dist[a] >= dist[b]:
                left.append(par[a])
            else:
                right.append(par[b])
        if left[-1] != right[-1]:
            continue
        cyc = left + right[-2::-1]
        if len(set(cyc)) != len(cyc):
            continue
        if best is None or len(cyc) < len(best):
            best = cyc
    return best


def cycle_packing(adj: Adj) -> int:
    """Size of a greedy packing of vertex-disjoint short cycles."""
    work = _copy(adj)
    count = 0
    while True:
        _peel(work)
        cyc = shortest_cycle(work)
        if cyc is None:
            return count
        count += 1
        for v in cyc:
            _delete(work, v)


def _as_adj(g: Graph) -> Adj:
    return {v: set(g.adj[v]) for v in range(g.n)}


class _Search:
    def __init__(self, g: Graph, independent: bool, node_limit: int | None):
        self.g = g
        self.independent = independent
        self.best: frozenset[int] | None = None
        self.bound = g.n + 1
        self.nodes = 0
        self.node_limit = node_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise RuntimeError("branching node limit exceeded")

    def record(self, chosen: frozenset[int]) -> None:
        if len(chosen) < self.bound:
            self.bound = len(chosen)
            self.best = chosen

    def take(self, adj: Adj, forbidden: set[int], chosen: frozenset[int], v: int):
        adj = _copy(adj)
        _delete(adj, v)
        forbidden = set(forbidden)
        if self.independent:
            forbidden.update(self.g.adj[v])
        return adj, forbidden, chosen | {v}


def _finish_chains(adj: Adj, forbidden: set[int]) -> list[int] | None:
    """Exact completion when every undecided vertex has degree 2.

    Undecided chains between forbidden hubs act as deletable edges, direct
    hub-hub edges as undeletable ones; Kruskal with undeletable edges first
    keeps a maximal forest and every rejected chain costs one vertex.
    """
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in sorted(forbidden & adj.keys()):
        for w in adj[v]:
            if w in forbidden and v < w:
                a, b = find(v), find(w)
                if a == b:
                    return None
                parent[a] = b
    picks: list[int] = []
    seen: set[int] = set()
    for s in sorted(adj):
        if s in forbidden or s in seen:
            continue
        chain = [s]
        seen.add(s)
        ends = []
        closed = False
        for first in sorted(adj[s]):
            prev, cur = s, first
            while cur not in forbidden:
                if cur == s:
                    closed = True
                    break
                if cur in seen:
                    break
                seen.add(cur)
                chain.append(cur)
                nxt = [w for w in adj[cur] if w != prev]
                prev, cur = cur, nxt[0]
            if closed:
                break
            if cur in forbidden:
                ends.append(cur)
        if closed:
            picks.append(min(chain))
            continue
        a, b = find(ends[0]), find(ends[1])
        if a == b:
            picks.append(min(chain))
        else:
            parent[a] = b
    return picks


def hub_branch(g: Graph, independent: bool = False, node_limit: int | None = None) -> frozenset[int] | None:
    """Minimum (independent) FVS by in/out branching on degree>=3 vertices."""
    s = _Search(g, independent, node_limit)

    def rec(adj: Adj, forbidden: set[int], chosen: frozenset[int]) -> None:
        s.tick()
        _peel(adj)
        if not adj:
            s.record(chosen)
            return
        if not _forbidden_forest(adj, forbidden):
            return
        lb = _cyclomatic_bound(adj, forbidden)
        if lb is None or len(chosen) + lb >= s.bound:
            return
        branchable = [v for v in adj if v not in forbidden and len(adj[v]) >= 3]
        if not branchable:
            picks = _finish_chains(adj, forbidden)
            if picks is not None:
                s.record(chosen | frozenset(picks))
            return
        v = min(branchable, key=lambda x: (-len(adj[x]), x))
        rec(*s.take(adj, forbidden, chosen, v))
        rec(_copy(adj), forbidden | {v}, chosen)

    rec(_as_adj(g), set(), frozenset())
    return s.best


def cycle_branch(g: Graph, independent: bool = False, node_limit: int | None = None) -> frozenset[int] | None:
    """Minimum (independent) FVS by shortest-cycle branching with a packing bound."""
    s = _Search(g, independent, node_limit)

    def rec(adj: Adj, forbidden: set[int], chosen: frozenset[int]) -> None:
        s.tick()
        _peel(adj)
        if not adj:
            s.record(chosen)
            return
        if not _forbidden_forest(adj, forbidden):
            return
        lb = _cyclomatic_bound(adj, forbidden)
        if lb is None or len(chosen) + lb >= s.bound:
            return
        if len(chosen) + cycle_packing(adj) >= s.bound:
            return
        cyc = shortest_cycle(adj)
        options = sorted((v for v in cyc if v not in forbidden), key=lambda x: (-len(adj[x]), x))
        skipped: set[int] = set()
        for v in options:
            rec(*s.take(adj, forbidden | skipped, chosen, v))
            skipped.add(v)

    rec(_as_adj(g), set(), frozenset())
    return s.best
