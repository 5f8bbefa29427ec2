"""Exact treedepth and longest path for small graphs, plus a DFS upper bound."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import CapacityError
from .graph import Graph

TREEDEPTH_CAP = 20
LONGEST_PATH_CAP = 20


def treedepth_exact(g: Graph, cap: int = TREEDEPTH_CAP) -> int:
    """td(empty)=0; td of a connected graph is 1 + min over v of td(g - v);
    td of a disconnected graph is the max over its components."""
    if g.n > cap:
        raise CapacityError(f"treedepth_exact: n={g.n} exceeds cap {cap}", g.n, cap)
    if g.n == 0:
        return 0
    table = kernels.treedepth_table(g.masks, g.n)
    return int(table[(1 << g.n) - 1])


def dfs_depth_bound(g: Graph) -> int:
    """Height of a DFS forest, which is always an elimination forest of ``g``."""
    depth = [0] * g.n
    best = 0
    for root in range(g.n):
        if depth[root]:
            continue
        depth[root] = 1
        stack = [(root, iter(g.adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not depth[w]:
                    depth[w] = depth[v] + 1
                    best = max(best, depth[w])
                    stack.append((w, iter(g.adj[w])))
                    break
            else:
                stack.pop()
        best = max(best, 1)
    return best


@dataclass(frozen=True)
class TreedepthValue:
    value: int
    exact: bool


def treedepth(g: Graph, cap: int = TREEDEPTH_CAP) -> TreedepthValue:
    """Exact value under the cap, otherwise the DFS bound flagged as not exact."""
    if g.n <= cap:
        return TreedepthValue(treedepth_exact(g, cap), True)
    return TreedepthValue(dfs_depth_bound(g), False)


def longest_path_length(g: Graph, cap: int = LONGEST_PATH_CAP) -> int:
    """Number of edges on a longest simple path."""
    if g.n > cap:
        raise CapacityError(f"longest_path_length: n={g.n} exceeds cap {cap}", g.n, cap)
    if g.n == 0:
        return 0
    return int(kernels.longest_path_edges(g.masks, g.n))
