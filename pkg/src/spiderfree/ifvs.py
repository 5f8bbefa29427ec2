"""Minimum independent feedback vertex sets of connected subcubic graphs.

Outside K4 a minimum FVS of a connected subcubic graph can always be turned
into an *independent* one of the same size. The pipeline:

1. seed with an exact minimum FVS (:func:`min_fvs_exact`);
2. move every member onto a degree-3 vertex (:func:`normalize_degree3`);
3. grow an independent, nonseparating set ``J`` inside ``F`` until ``G - J``
   is a nice cactus (:func:`make_nice_cactus`);
4. pick one vertex per remaining cycle so that everything stays independent
   (:func:`complete_ifvs`).

Very nice cacti (every vertex on exactly one cycle), trees and K4 are handled
directly. All choices break ties towards the lowest vertex id.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .blocks import bridges_and_blocks, cactus_cycles, is_very_nice_cactus
from .checks import is_fvs, is_ifvs
from .errors import CapacityError, ValidationError
from .graph import Graph
from .search import hub_branch

FVS_SUBCUBIC_CAP = 60
FVS_GENERAL_CAP = 18


def min_fvs_exact(g: Graph, subcubic_cap: int = FVS_SUBCUBIC_CAP, general_cap: int = FVS_GENERAL_CAP) -> frozenset[int]:
    """Minimum feedback vertex set by hub branching (deterministic)."""
    cap = subcubic_cap if g.is_subcubic() else general_cap
    if g.n > cap:
        raise CapacityError(f"min_fvs_exact: n={g.n} exceeds cap {cap}", g.n, cap)
    res = hub_branch(g)
    assert res is not None
    return res


def is_k4(g: Graph) -> bool:
    return g.n == 4 and g.m == 6


# -- degree-3 normalisation -------------------------------------------------

def _walk_to_branch(g: Graph, start: int, first: int) -> tuple[int | None, int]:
    """Follow degree-2 vertices from ``start`` via ``first``; return the first
    vertex of degree 3 and the number of steps (None at a dead end)."""
    prev, cur, steps = start, first, 1
    while g.degree(cur) == 2:
        nxt = g.adj[cur][0] if g.adj[cur][1] == prev else g.adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            return None, steps
    if g.degree(cur) >= 3:
        return cur, steps
    return None, steps


def normalize_degree3(g: Graph, f) -> frozenset[int]:
    """Move each degree-2 member of the FVS ``f`` to a nearest degree-3 vertex.

    Members lying on no cycle are dropped, and two members landing on the same
    vertex merge, so the result is never larger than ``f`` (and equal in size
    when ``f`` is minimum).
    """
    if not g.is_connected() or not g.is_subcubic():
        raise ValidationError("normalize_degree3 needs a connected subcubic graph")
    if g.is_forest() or all(g.degree(v) == 2 for v in range(g.n)):
        raise ValidationError("normalize_degree3 is not defined for trees and cycles")
    if not is_fvs(g, f):
        raise ValidationError("input set is not a feedback vertex set")
    out: set[int] = set()
    for v in sorted(f):
        if g.degree(v) == 3:
            out.add(v)
            continue
        if g.degree(v) < 2:
            continue
        ends = [_walk_to_branch(g, v, w) for w in g.adj[v]]
        if any(e is None for e, _ in ends):
            continue  # the chain through v dead-ends, so v is on no cycle
        out.add(min(ends, key=lambda t: (t[1], t[0]))[0])
    res = frozenset(out)
    assert is_fvs(g, res)
    return res


# -- the transformation state --------------------------------------------------

@dataclass(frozen=True)
class TransformState:
    """``f``: FVS of degree-3 vertices; ``j``: independent, nonseparating, inside ``f``."""

    host: Graph
    f: frozenset[int]
    j: frozenset[int] = frozenset()
    steps: tuple[str, ...] = field(default=(), compare=False)

    def check(self) -> None:
        g = self.host
        assert is_fvs(g, self.f), "F is no longer a feedback vertex set"
        assert all(g.degree(v) == 3 for v in self.f), "F contains a vertex of degree < 3"
        assert self.j <= self.f, "J is not contained in F"
        assert g.is_independent(self.j), "J is not independent"
        assert g.remove_vertices(self.j)[0].is_connected(), "G - J is disconnected"

    def rest(self) -> tuple[Graph, list[int]]:
        """H = host - J with its back-map to host ids."""
        return self.host.remove_vertices(self.j)


def _non_cycle_block(h: Graph) -> list[int] | None:
    """Vertices of the lowest 2-connected block of ``h`` that is not a cycle."""
    dec = bridges_and_blocks(h)
    found = [sorted(vs) for vs, es in zip(dec.blocks, dec.block_edges) if len(es) > 1 and len(es) != len(vs)]
    return min(found) if found else None


def _is_cutvertex(h: Graph, v: int) -> bool:
    return not h.remove_vertices([v])[0].is_connected()


def make_nice_cactus(state: TransformState, check: bool = True) -> TransformState:
    """Grow J until host - J is a nice cactus, never growing F."""
    g = state.host
    if not g.is_connected() or not g.is_subcubic():
        raise ValidationError("make_nice_cactus needs a connected subcubic host")
    if is_k4(g) or is_very_nice_cactus(g):
        raise ValidationError("make_nice_cactus does not apply to K4 or very nice cacti")
    f, j, steps = set(state.f), set(state.j), list(state.steps)
    if check:
        state.check()
    while True:
        h, back = g.remove_vertices(j)
        block = _non_cycle_block(h)
        if block is None:
            break
        kset = set(block)
        kdeg = {x: sum(1 for y in h.adj[x] if y in kset) for x in block}
        r = min(x for x in block if back[x] in f)
        while True:
            if kdeg[r] == 3:
                j.add(back[r])
                steps.append(f"add {back[r]} to J (degree 3 in block)")
                break
            # walk from r along its block path to the nearer block-branch vertex p
            routes = []
            for first in (y for y in h.adj[r] if y in kset):
                path, prev, cur = [], r, first
                while kdeg[cur] == 2:
                    path.append(cur)
                    prev, cur = cur, next(y for y in h.adj[cur] if y in kset and y != prev)
                path.append(cur)
                routes.append((len(path), back[cur], path))
            path = min(routes)[2]
            r2 = next(x for x in path if g.degree(back[x]) == 3)
            gr, gr2 = back[r], back[r2]
            if any(w in j for w in g.adj[gr]):
                move = "J-neighbour"
            elif not _is_cutvertex(h, r):
                j.add(gr)
                steps.append(f"add {gr} to J (no J-neighbour, not a cutvertex)")
                break
            else:
                move = "cutvertex"
            f.discard(gr)
            f.add(gr2)
            steps.append(f"replace {gr} by {gr2} in F ({move})")
            if check:
                TransformState(g, frozenset(f), frozenset(j)).check()
            r = r2
        if check:
            TransformState(g, frozenset(f), frozenset(j)).check()
    return TransformState(g, frozenset(f), frozenset(j), tuple(steps))


# -- completion on a nice cactus --------------------------------------------------

class Outcome(enum.Enum):
    SOLUTION = "solution"
    NO_IFVS_K4 = "no-ifvs-k4"


@dataclass(frozen=True)
class IfvsResult:
    outcome: Outcome
    vertices: frozenset[int] | None = None
    degree3_only: bool | None = None
    size_certificate: int | None = None
    case: str = ""

    @property
    def size(self) -> int | None:
        return None if self.vertices is None else len(self.vertices)

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "vertices": None if self.vertices is None else sorted(self.vertices),
            "size": self.size,
            "degree3_only": self.degree3_only,
            "size_certificate": self.size_certificate,
            "case": self.case,
        }


def _nearest_per_cycle(h: Graph, cycles: list[list[int]], c: list[int]) -> list[int]:
    """For every cycle of ``h`` other than ``c``, its vertex nearest to ``c``."""
    dist = {v: 0 for v in c}
    queue = deque(sorted(c))
    while queue:
        v = queue.popleft()
        for w in h.adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return [min(other, key=lambda v: (dist[v], v)) for other in cycles if other is not c]


def complete_ifvs(state: TransformState) -> IfvsResult:
    """Turn J plus one vertex per cycle of the nice cactus host - J into an IFVS."""
    g = state.host
    h, back = state.rest()
    fwd = {v: i for i, v in enumerate(back)}
    cycles = cactus_cycles(h)
    assert cycles is not None, "host - J is not a cactus"
    j = set(state.j)

    def finish(chosen, case):
        res = frozenset(chosen)
        assert is_ifvs(g, res), f"case {case} produced an invalid set"
        assert len(res) <= len(state.f), f"case {case} produced a set larger than F"
        return IfvsResult(Outcome.SOLUTION, res, all(g.degree(v) == 3 for v in res), len(state.f), case)

    if not cycles:
        return finish(j, "acyclic")
    cycle_of = {v: i for i, cyc in enumerate(cycles) for v in cyc}

    def s_of(c):
        return {back[v] for v in _nearest_per_cycle(h, cycles, c)}

    # a degree-3 cycle vertex whose third neighbour is in H but on no cycle
    candidates = []
    for v in range(h.n):
        if v not in cycle_of or g.degree(back[v]) != 3 or h.degree(v) != 3:
            continue
        third = [w for w in h.adj[v] if cycle_of.get(w) != cycle_of[v]]
        if len(third) == 1 and third[0] not in cycle_of:
            candidates.append((back[v], v))
    if candidates:
        gv, v = min(candidates)
        c = cycles[cycle_of[v]]
        return finish(j | s_of(c) | {gv}, "free-cycle-vertex")
    # a vertex on no cycle would give a candidate at its nearest cycle vertex
    assert all(v in cycle_of for v in range(h.n)), "off-cycle vertex without a free cycle vertex"
    assert j, "host itself would be a very nice cactus"
    jv = min(j)
    nbrs = sorted(fwd[w] for w in g.adj[jv])
    assert len(nbrs) == 3
    if len({cycle_of[v] for v in nbrs}) == 1:
        c = cycles[cycle_of[nbrs[0]]]
        assert len(c) > 3, "J-vertex with all neighbours on a triangle would induce K4"
        v1, v2 = next((a, b) for a in nbrs for b in nbrs if a < b and not h.has_edge(a, b))
        chosen = (j - {jv}) | {back[v1], back[v2]} | s_of(c)
        return finish(chosen, "j-neighbours-on-one-cycle")
    v1 = min((v for v in nbrs if len({cycle_of[w] for w in nbrs if w != v}) == 2), key=lambda v: back[v])
    c = cycles[cycle_of[v1]]
    chosen = (j - {jv}) | {back[v1]} | s_of(c)
    return finish(chosen, "j-neighbours-on-several-cycles")


def very_nice_cactus_ifvs(g: Graph, root: int = 0) -> frozenset[int]:
    """In each cycle, the vertex farthest from ``root`` (ties to the lowest id)."""
    dist = g.bfs_distances(root)
    return frozenset(max(c, key=lambda v: (dist[v], -v)) for c in cactus_cycles(g))


def min_ifvs_subcubic(g: Graph, check: bool = True) -> IfvsResult:
    """Minimum independent FVS of a connected subcubic graph."""
    if not g.is_connected():
        raise ValidationError("min_ifvs_subcubic needs a connected graph; solve components separately")
    if not g.is_subcubic():
        raise ValidationError("min_ifvs_subcubic needs a subcubic graph (max degree <= 3)")
    if is_k4(g):
        return IfvsResult(Outcome.NO_IFVS_K4, case="k4")
    if g.is_forest():
        return IfvsResult(Outcome.SOLUTION, frozenset(), True, 0, "tree")
    if is_very_nice_cactus(g):
        sol = very_nice_cactus_ifvs(g)
        assert is_ifvs(g, sol)
        return IfvsResult(Outcome.SOLUTION, sol, False, len(sol), "very-nice-cactus")
    seed = min_fvs_exact(g)
    f = normalize_degree3(g, seed)
    assert len(f) == len(seed)
    state = make_nice_cactus(TransformState(g, f), check=check)
    res = complete_ifvs(state)
    assert len(res.vertices) == len(seed) and res.degree3_only
    return IfvsResult(res.outcome, res.vertices, True, len(seed), res.case)
