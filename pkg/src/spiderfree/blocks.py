"""Bridges, biconnected blocks, 2-edge-connected pieces and cactus classes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ValidationError
from .graph import Edge, Graph


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    block_edges: list[frozenset[Edge]]
    bridges: list[Edge]
    proper_bridges: list[Edge]
    cutvertices: list[int]
    # (block index, cutvertex) incidences of the block-cut tree
    block_cut_tree: list[tuple[int, int]] = field(default_factory=list)


def bridges_and_blocks(g: Graph) -> BlockDecomposition:
    """Single iterative DFS with low-links.

    Blocks are the maximal 2-connected subgraphs plus bridge edges; isolated
    vertices form singleton blocks without edges.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[Edge] = []
    blocks, block_edges, bridges = [], [], []

    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset([root]))
            block_edges.append(frozenset())
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            nbrs = g.adj[v]
            if i < len(nbrs):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                es = []
                while True:
                    e = edge_stack.pop()
                    es.append(e if e[0] < e[1] else (e[1], e[0]))
                    if e == (parent, v):
                        break
                blocks.append(frozenset(x for e in es for x in e))
                block_edges.append(frozenset(es))
                if low[v] > disc[parent]:
                    bridges.append((min(parent, v), max(parent, v)))

    bridges.sort()
    proper = [(u, v) for u, v in bridges if g.degree(u) > 1 and g.degree(v) > 1]
    count: dict[int, int] = {}
    for b in blocks:
        for x in b:
            count[x] = count.get(x, 0) + 1
    cuts = sorted(x for x, c in count.items() if c > 1)
    cutset = set(cuts)
    tree = [(i, x) for i, b in enumerate(blocks) for x in sorted(b) if x in cutset]
    return BlockDecomposition(blocks, block_edges, bridges, proper, cuts, tree)


def bridges(g: Graph) -> list[Edge]:
    return bridges_and_blocks(g).bridges


def two_edge_components(g: Graph, bridge_list: list[Edge] | None = None) -> list[list[int]]:
    """Vertex sets of the components left after deleting every bridge."""
    if bridge_list is None:
        bridge_list = bridges(g)
    return g.remove_edges(bridge_list).component_sets()


def is_quasi_bridgeless(g: Graph) -> bool:
    return not bridges_and_blocks(g).proper_bridges


class CactusClass(enum.IntEnum):
    NOT_CACTUS = 0
    CACTUS = 1
    NICE_CACTUS = 2
    VERY_NICE_CACTUS = 3


def _cycle_order(vertices: frozenset[int], edges: frozenset[Edge]) -> list[int]:
    nb: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    start = min(vertices)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = nb[cur]
        nxt = b if a == prev else a
        if prev is None:
            nxt = min(a, b)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def cactus_cycles(g: Graph, dec: BlockDecomposition | None = None) -> list[list[int]] | None:
    """Cycles of ``g`` (in cyclic order) if ``g`` is a cactus, else None."""
    dec = dec or bridges_and_blocks(g)
    cycles = []
    for vs, es in zip(dec.blocks, dec.block_edges):
        if len(es) <= 1:
            continue
        if len(es) != len(vs):
            return None
        cycles.append(_cycle_order(vs, es))
    cycles.sort()
    return cycles


def cactus_classify(g: Graph) -> CactusClass:
    if not g.is_connected():
        raise ValidationError("cactus classification needs a connected graph")
    cycles = cactus_cycles(g)
    if cycles is None:
        return CactusClass.NOT_CACTUS
    on_cycles = [0] * g.n
    for c in cycles:
        for v in c:
            on_cycles[v] += 1
    if any(k > 1 for k in on_cycles):
        return CactusClass.CACTUS
    if g.n and all(k == 1 for k in on_cycles):
        return CactusClass.VERY_NICE_CACTUS
    return CactusClass.NICE_CACTUS


def is_very_nice_cactus(g: Graph) -> bool:
    return g.is_connected() and cactus_classify(g) is CactusClass.VERY_NICE_CACTUS
