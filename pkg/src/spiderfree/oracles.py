"""Reference solvers for the five problems; the ground truth for the test-suite.

Small graphs go through exhaustive bitmask kernels, which return the
lexicographically least optimum. Larger sparse inputs (needed for reduction
graphs and 2-subdivisions) go through exact branching searches; those return
*an* optimum, not necessarily the least one.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .checks import is_colouring, is_cvc, is_fvs, is_ifvs, is_matching_cut
from .errors import CapacityError, ValidationError
from .graph import Graph
from .search import cycle_branch, hub_branch


@dataclass
class OracleCaps:
    """Size limits; configuration rather than constants."""

    subset: int = 18        # exhaustive FVS/IFVS/CVC enumeration
    branch: int = 80        # branching routes for larger sparse graphs
    hubs: int = 24          # max vertices of degree >= 3 for hub branching
    chromatic: int = 18
    matching_cut: int = 16


CAPS = OracleCaps()


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(v for v in range(mask.bit_length()) if (mask >> v) & 1)


def _set_to_mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _ends(g: Graph):
    arr = g.edge_array
    return arr[:, 0].copy(), arr[:, 1].copy()


def _subset_fvs(g: Graph, independent: bool) -> frozenset[int] | None:
    if g.n == 0:
        return frozenset()
    eu, ev = _ends(g)
    mask = int(kernels.min_feedback_set(g.masks, eu, ev, g.n, independent, 0))
    return None if mask < 0 else _mask_to_set(mask)


def oracle_min_fvs(g: Graph, caps: OracleCaps = CAPS) -> frozenset[int]:
    """Minimum feedback vertex set."""
    if g.n <= caps.subset:
        res = _subset_fvs(g, False)
    elif g.n <= caps.branch:
        res = cycle_branch(g)
    else:
        raise CapacityError(f"oracle_min_fvs: n={g.n} exceeds cap {caps.branch}", g.n, caps.branch)
    assert res is not None and is_fvs(g, res)
    return res


def oracle_min_ifvs(g: Graph, caps: OracleCaps = CAPS) -> frozenset[int] | None:
    """Minimum independent feedback vertex set, or None when there is none."""
    if g.n <= caps.subset:
        res = _subset_fvs(g, True)
    elif g.n <= caps.branch:
        hubs = sum(1 for v in range(g.n) if g.degree(v) >= 3)
        res = hub_branch(g, independent=True) if hubs <= caps.hubs else cycle_branch(g, independent=True)
    else:
        raise CapacityError(f"oracle_min_ifvs: n={g.n} exceeds cap {caps.branch}", g.n, caps.branch)
    assert res is None or is_ifvs(g, res)
    return res


def oracle_min_cvc(g: Graph, required=(), caps: OracleCaps = CAPS) -> frozenset[int] | None:
    """Minimum connected vertex cover containing ``required``; None if none exists."""
    if g.n > caps.subset:
        raise CapacityError(f"oracle_min_cvc: n={g.n} exceeds cap {caps.subset}", g.n, caps.subset)
    if g.n == 0:
        return frozenset()
    eu, ev = _ends(g)
    mask = int(kernels.min_connected_cover(g.masks, eu, ev, g.n, _set_to_mask(required)))
    if mask < 0:
        return None
    res = _mask_to_set(mask)
    assert is_cvc(g, res)
    return res


def k_colouring(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with colours 0..k-1 by backtracking, or None.

    Vertices are coloured in a fixed order (most constrained first, as in
    DSATUR); a fresh colour is only ever the next unused one.
    """
    if g.n == 0:
        return []
    colours = [-1] * g.n
    adj = g.adj

    def pick():
        best, key = -1, None
        for v in range(g.n):
            if colours[v] >= 0:
                continue
            sat = len({colours[w] for w in adj[v] if colours[w] >= 0})
            cand = (-sat, -len(adj[v]), v)
            if key is None or cand < key:
                best, key = v, cand
        return best

    def rec(done: int, used: int) -> bool:
        if done == g.n:
            return True
        v = pick()
        taken = {colours[w] for w in adj[v]}
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colours[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
        colours[v] = -1
        return False

    return list(colours) if rec(0, 0) else None


def oracle_chromatic(g: Graph, caps: OracleCaps = CAPS, with_colouring: bool = False):
    """Chromatic number (optionally with an optimal colouring)."""
    if g.n > caps.chromatic:
        raise CapacityError(f"oracle_chromatic: n={g.n} exceeds cap {caps.chromatic}", g.n, caps.chromatic)
    if g.n == 0:
        return (0, []) if with_colouring else 0
    k = 1 if g.m == 0 else 2
    while True:
        col = k_colouring(g, k)
        if col is not None:
            assert is_colouring(g, col, k)
            return (k, col) if with_colouring else k
        k += 1


def oracle_has_matching_cut(g: Graph, caps: OracleCaps = CAPS) -> list[tuple[int, int]] | None:
    """Edges of a matching cut of a connected graph, or None."""
    if not g.is_connected():
        raise ValidationError("matching cut is defined on connected graphs")
    if g.n > caps.matching_cut:
        raise CapacityError(f"oracle_has_matching_cut: n={g.n} exceeds cap {caps.matching_cut}",
                            g.n, caps.matching_cut)
    if g.n < 2:
        return None
    side = int(kernels.matching_cut_side(g.masks, g.n))
    if side < 0:
        return None
    cut = sorted((u, v) for u, v in g.edges if ((side >> u) & 1) != ((side >> v) & 1))
    assert is_matching_cut(g, cut)
    return cut
