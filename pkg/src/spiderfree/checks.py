"""Witness validators, written independently of every solver they check."""

from __future__ import annotations

from collections.abc import Iterable

from .graph import Graph


def _acyclic_after(g: Graph, removed: set[int]) -> bool:
    """DFS cycle test on g - removed."""
    seen: dict[int, int] = {}
    for root in range(g.n):
        if root in removed or root in seen:
            continue
        seen[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in removed or w == seen[v]:
                    continue
                if w in seen:
                    return False
                seen[w] = v
                stack.append(w)
    return True


def is_fvs(g: Graph, s: Iterable[int]) -> bool:
    return _acyclic_after(g, set(s))


def is_ifvs(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return is_fvs(g, s) and all(not (u in s and v in s) for u, v in g.edges)


def is_cvc(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if any(u not in s and v not in s for u, v in g.edges):
        return False
    if not s:
        return True
    start = next(iter(s))
    reach = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in s and w not in reach:
                reach.add(w)
                stack.append(w)
    return reach == s


def is_colouring(g: Graph, colours, k: int | None = None) -> bool:
    if len(colours) != g.n:
        return False
    if k is not None and any(not 0 <= c < k for c in colours):
        return False
    return all(colours[u] != colours[v] for u, v in g.edges)


def is_matching_cut(g: Graph, cut: Iterable) -> bool:
    """Edges form a matching and deleting them disconnects the (connected) graph."""
    cut = [tuple(sorted(e)) for e in cut]
    if not cut or any(e not in g.edges for e in cut):
        return False
    ends = [v for e in cut for v in e]
    if len(set(ends)) != len(ends):
        return False
    return not g.remove_edges(cut).is_connected()
