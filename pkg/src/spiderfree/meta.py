"""Decomposition-based solvers for FVS, IFVS, CVC, Colouring and Matching Cut.

Every input is split into connected components, then along its bridges. The
pieces are either subcubic or (on subdivided-star-free inputs) of bounded
treedepth; each piece goes to the matching engine and the partial answers are
merged with a problem-specific rule. Also here: empirical checks of the
treedepth bounds for non-subcubic graphs and the pattern-graph classifier.
"""

from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass, field

from .blocks import bridges_and_blocks, cactus_cycles, two_edge_components
from .checks import is_colouring, is_cvc, is_fvs, is_ifvs, is_matching_cut
from .errors import CapacityError, ValidationError
from .graph import Graph, connected_components
from .ifvs import Outcome, is_k4, min_fvs_exact, min_ifvs_subcubic
from .oracles import CAPS, OracleCaps, k_colouring, oracle_chromatic, oracle_has_matching_cut, \
    oracle_min_cvc, oracle_min_fvs, oracle_min_ifvs
from .subgraph import SpiderPattern, contains_spider
from .treedepth import TREEDEPTH_CAP, TreedepthValue, treedepth

PROBLEMS = ("fvs", "ifvs", "cvc", "colouring", "matchingcut")
_ALIASES = {"coloring": "colouring", "matching-cut": "matchingcut", "matching_cut": "matchingcut"}


@dataclass(frozen=True)
class ProblemKind:
    """A problem name plus optional k: colours for colouring, a size budget otherwise."""

    name: str
    k: int | None = None

    def __post_init__(self):
        name = _ALIASES.get(self.name.lower(), self.name.lower())
        if name not in PROBLEMS:
            raise ValidationError(f"unknown problem {self.name!r}; expected one of {', '.join(PROBLEMS)}")
        if self.k is not None and (name == "matchingcut" or self.k < 0 or (name == "colouring" and self.k < 1)):
            raise ValidationError("k is a colour count (>= 1) or a size budget (>= 0); matching cut takes none")
        object.__setattr__(self, "name", name)

    def __str__(self):
        return self.name if self.k is None else f"{self.name}({self.k})"


# -- C-type / T-type decomposition -------------------------------------------------

class PartKind(str, enum.Enum):
    C = "C"
    T = "T"


@dataclass
class Part:
    graph: Graph
    back: list[int]
    kind: PartKind
    treedepth: TreedepthValue | None = None


@dataclass
class PartitionedInstance:
    parts: list[Part]
    connecting_bridges: list[tuple[tuple[int, int], int, int]]

    def to_dict(self) -> dict:
        return {
            "parts": [{"kind": p.kind.value, "vertices": sorted(p.back), "edges": p.graph.m,
                       "subcubic": p.graph.is_subcubic(),
                       "treedepth": None if p.treedepth is None else p.treedepth.value,
                       "treedepth_exact": None if p.treedepth is None else p.treedepth.exact}
                      for p in self.parts],
            "connecting_bridges": [[list(e), a, b] for e, a, b in self.connecting_bridges],
        }


def decompose_ct(g: Graph, td_cap: int = TREEDEPTH_CAP) -> PartitionedInstance:
    """Split a connected graph into merged C-type and T-type parts.

    A unit is a 2-edge-connected piece plus its incident bridges. It is C-type
    when it is subcubic and its piece is not a cactus (a subcubic
    2-edge-connected cactus is a single cycle or vertex, which has small
    treewidth and counts as T-type). Units of one type sharing a bridge are
    merged; a fully subcubic graph is a single C-type part.
    """
    if not g.is_connected():
        raise ValidationError("decompose_ct needs a connected graph")
    if g.is_subcubic():
        return PartitionedInstance([Part(g, list(range(g.n)), PartKind.C)], [])
    dec = bridges_and_blocks(g)
    pieces = two_edge_components(g, dec.bridges)
    piece_of = {v: i for i, vs in enumerate(pieces) for v in vs}
    kinds = []
    for vs in pieces:
        inside = set(vs)
        subcubic = all(g.degree(v) <= 3 for v in vs)  # bridges are counted in g.degree
        sub, _ = g.induced(inside)
        cactus_piece = sub.m == 0 or (cactus_cycles(sub) is not None)
        kinds.append(PartKind.C if subcubic and not cactus_piece else PartKind.T)
    parent = list(range(len(pieces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in dec.bridges:
        a, b = piece_of[u], piece_of[v]
        if kinds[a] == kinds[b]:
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for i in range(len(pieces)):
        groups.setdefault(find(i), []).append(i)
    ordered = sorted(groups.values(), key=lambda idx: min(min(pieces[i]) for i in idx))
    part_of_piece = {}
    parts = []
    for pi, idx in enumerate(ordered):
        vs = sorted(v for i in idx for v in pieces[i])
        sub, back = g.induced(vs)
        kind = kinds[idx[0]]
        td = treedepth(sub, td_cap) if kind is PartKind.T and sub.n <= td_cap else None
        parts.append(Part(sub, back, kind, td))
        for i in idx:
            part_of_piece[i] = pi
    connecting = []
    for u, v in dec.bridges:
        a, b = part_of_piece[piece_of[u]], part_of_piece[piece_of[v]]
        if a != b:
            connecting.append(((u, v), a, b))
    return PartitionedInstance(parts, connecting)


# -- reports ---------------------------------------------------------------------

@dataclass
class SolveReport:
    problem: str
    k: int | None
    digest: str
    value: int | None = None
    decision: bool | None = None
    witness: object = None
    routes: list[dict] = field(default_factory=list)
    validation: bool | None = None
    flags: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "problem": self.problem, "k": self.k, "digest": self.digest, "value": self.value,
            "decision": self.decision, "witness": self.witness, "routes": self.routes,
            "validation": self.validation, "flags": self.flags,
        }
        if timings:
            out["timings"] = self.timings
        return out


def _route(kind: str, back, route: str, **extra) -> dict:
    return {"part": kind, "n": len(back), "vertices": sorted(back)[:3] + (["..."] if len(back) > 3 else []),
            "route": route, **extra}


# -- per-problem solvers on one connected component ------------------------------

def _solve_fvs(g: Graph, caps: OracleCaps, routes: list) -> set[int]:
    chosen: set[int] = set()
    h = g.remove_edges(bridges_and_blocks(g).bridges)
    for vs in h.component_sets():
        sub, back = h.induced(vs)
        if sub.is_forest():
            routes.append(_route("piece", back, "trivial"))
            continue
        if sub.is_subcubic():
            sol = min_fvs_exact(sub)
            routes.append(_route("C", back, "subcubic"))
        else:
            sol = _capped(lambda: oracle_min_fvs(sub, caps), back)
            routes.append(_route("T", back, "treedepth"))
        chosen.update(back[v] for v in sol)
    return chosen


def _capped(fn, back):
    try:
        return fn()
    except CapacityError as exc:
        raise CapacityError(f"part with vertices {sorted(back)[:6]}...: {exc}", exc.size, exc.cap) from None


def _solve_ifvs(g: Graph, caps: OracleCaps, routes: list, flags: list) -> set[int] | None:
    inst = decompose_ct(g)
    chosen: set[int] = set()
    feasible = True
    for part in inst.parts:
        sub, back = part.graph, part.back
        if part.kind is PartKind.C:
            res = min_ifvs_subcubic(sub)
            routes.append(_route("C", back, "subcubic", case=res.case))
            if res.outcome is Outcome.NO_IFVS_K4:
                feasible = False
                continue
            sol = res.vertices
        else:
            sol = _capped(lambda: oracle_min_ifvs(sub, caps), back)
            routes.append(_route("T", back, "treedepth"))
            if sol is None:
                feasible = False
                continue
        chosen.update(back[v] for v in sol)
    if not feasible:
        return None
    clashes = [e for e, _, _ in inst.connecting_bridges if e[0] in chosen and e[1] in chosen]
    if clashes:
        flags.append(f"independence violated across bridges {clashes}")
    return chosen


def _solve_cvc(g: Graph, caps: OracleCaps, routes: list, flags: list) -> set[int] | None:
    if g.m == 0:
        return set()
    if g.n == 2:
        routes.append(_route("piece", [0, 1], "trivial"))
        return {0}
    dec = bridges_and_blocks(g)
    required = {v for e in dec.bridges for v in e if g.degree(v) >= 2}
    pieces = two_edge_components(g, dec.bridges)
    chosen: set[int] = set()
    for vs in pieces:
        inside = set(vs)
        extra = {w for v in vs for w in g.adj[v] if w not in inside}
        sub, back = g.induced(inside | extra)
        keep = [(a, b) for a, b in sub.edges if back[a] in inside or back[b] in inside]
        sub = Graph(sub.n, keep)
        if sub.m == 0:
            continue
        fwd = {v: i for i, v in enumerate(back)}
        need = [fwd[v] for v in required if v in fwd]
        sol = _capped(lambda: oracle_min_cvc(sub, need, caps), back)
        routes.append(_route("T" if not sub.is_subcubic() else "C", back, "oracle"))
        if sol is None:
            return None
        chosen.update(back[v] for v in sol)
    missing = [e for e in dec.proper_bridges if not set(e) <= chosen]
    if missing:
        flags.append(f"proper bridges not covered on both ends: {missing}")
    return chosen


def brooks_colouring(g: Graph) -> list[int] | None:
    """Optimal colouring of a connected subcubic graph following Brooks' theorem.

    1 colour without edges, 2 when bipartite, 4 only for K4, otherwise 3:
    greedy in reverse BFS order from a vertex of degree < 3, or, for cubic
    graphs, Lovasz's trick of pre-colouring two non-adjacent neighbours a, b
    of a vertex v with G - {a, b} connected and finishing at v.
    Returns None if no such v exists (cubic but not 2-connected).
    """
    n = g.n
    if g.m == 0:
        return [0] * n
    colours = [-1] * n
    colours[0] = 0
    queue = deque([0])
    bip = True
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if colours[w] < 0:
                colours[w] = 1 - colours[v]
                queue.append(w)
            elif colours[w] == colours[v]:
                bip = False
    if bip:
        return colours
    if is_k4(g):
        return [0, 1, 2, 3]

    def greedy(order, pre):
        col = dict(pre)
        for v in order:
            taken = {col[w] for w in g.adj[v] if w in col}
            col[v] = min(c for c in range(3) if c not in taken)
        return [col[v] for v in range(n)]

    def reverse_bfs(root, removed=()):
        seen = {root, *removed}
        order = [root]
        for v in order:
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        return order[::-1]

    low = [v for v in range(n) if g.degree(v) < 3]
    if low:
        return greedy(reverse_bfs(low[0]), {})
    for v in range(n):
        for a in g.adj[v]:
            for b in g.adj[v]:
                if a < b and not g.has_edge(a, b):
                    rest, _ = g.remove_vertices([a, b])
                    if rest.is_connected():
                        return greedy(reverse_bfs(v, (a, b)), {a: 0, b: 0})
    return None


def _solve_colouring(g: Graph, caps: OracleCaps, routes: list, flags: list) -> list[int]:
    dec = bridges_and_blocks(g)
    h = g.remove_edges(dec.bridges)
    colours = [-1] * g.n
    piece_of = {}
    pieces = h.component_sets()
    part_cols = []
    for i, vs in enumerate(pieces):
        sub, back = h.induced(vs)
        col = brooks_colouring(sub) if sub.is_subcubic() else None
        if col is not None:
            routes.append(_route("C", back, "subcubic"))
        else:
            _, col = _capped(lambda: oracle_chromatic(sub, caps, with_colouring=True), back)
            routes.append(_route("T" if not sub.is_subcubic() else "C", back, "treedepth"))
        part_cols.append(max(col) + 1)
        for v, c in zip(back, col):
            colours[v] = c
            piece_of[v] = i
    palette = max([2 if g.m else 1] + part_cols)
    # walk the tree of pieces, permuting colours of a piece when its bridge clashes
    links: dict[int, list[tuple[int, int]]] = {}
    for u, v in dec.bridges:
        links.setdefault(piece_of[u], []).append((u, v))
        links.setdefault(piece_of[v], []).append((v, u))
    done = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for here, there in sorted(links.get(p, [])):
            q = piece_of[there]
            if q in done:
                continue
            done.add(q)
            queue.append(q)
            if colours[there] == colours[here]:
                a = colours[there]
                b = next(c for c in range(palette) if c != a)
                for v in pieces[q]:
                    if colours[v] == a:
                        colours[v] = b
                    elif colours[v] == b:
                        colours[v] = a
    return colours


def _solve_matching_cut(g: Graph, caps: OracleCaps, routes: list) -> list[tuple[int, int]] | None:
    dec = bridges_and_blocks(g)
    if dec.proper_bridges:
        routes.append(_route("graph", range(g.n), "proper-bridge"))
        return [min(dec.proper_bridges)]
    if dec.bridges:
        routes.append(_route("graph", range(g.n), "pendant-bridge"))
        return [min(dec.bridges)]
    routes.append(_route("C" if g.is_subcubic() else "T", range(g.n), "oracle"))
    return _capped(lambda: oracle_has_matching_cut(g, caps), range(g.n))


# -- top level -------------------------------------------------------------------

def solve(problem, g: Graph, k: int | None = None, caps: OracleCaps = CAPS) -> SolveReport:
    """Solve ``problem`` on ``g`` through the component/bridge decomposition."""
    kind = problem if isinstance(problem, ProblemKind) else ProblemKind(problem, k)
    name = kind.name
    rep = SolveReport(name, kind.k, g.digest())
    t0 = time.perf_counter()
    comps = connected_components(g)
    if name == "matchingcut":
        if len(comps) != 1:
            raise ValidationError("matching cut is only defined for connected graphs")
        cut = _solve_matching_cut(g, caps, rep.routes)
        rep.decision = cut is not None
        rep.witness = cut
        rep.validation = cut is None or is_matching_cut(g, cut)
    elif name == "cvc":
        with_edges = [(c, back) for c, back in comps if c.m > 0]
        if len(with_edges) > 1:
            rep.decision = False
            rep.validation = True
            rep.flags.append("more than one component has edges")
        else:
            chosen: set[int] = set()
            if with_edges:
                c, back = with_edges[0]
                sol = _solve_cvc(c, caps, rep.routes, rep.flags)
                chosen = None if sol is None else {back[v] for v in sol}
            rep.decision = chosen is not None and (kind.k is None or len(chosen) <= kind.k)
            if chosen is not None:
                rep.value = len(chosen)
                rep.witness = sorted(chosen)
                rep.validation = is_cvc(g, chosen)
    elif name in ("fvs", "ifvs"):
        chosen = set()
        feasible = True
        for c, back in comps:
            sol = _solve_fvs(c, caps, rep.routes) if name == "fvs" else \
                _solve_ifvs(c, caps, rep.routes, rep.flags)
            if sol is None:
                feasible = False
                break
            chosen.update(back[v] for v in sol)
        rep.decision = feasible and (kind.k is None or len(chosen) <= kind.k)
        if feasible:
            rep.value = len(chosen)
            rep.witness = sorted(chosen)
            rep.validation = is_fvs(g, chosen) if name == "fvs" else is_ifvs(g, chosen)
    else:
        colours = [0] * g.n
        for c, back in comps:
            col = _solve_colouring(c, caps, rep.routes, rep.flags)
            for v, x in zip(back, col):
                colours[v] = x
        chi = (max(colours) + 1) if g.n else 0
        rep.value = chi
        rep.witness = colours
        rep.decision = None if kind.k is None else chi <= kind.k
        rep.validation = is_colouring(g, colours, chi)
    rep.timings["total_s"] = time.perf_counter() - t0
    if rep.validation is False:
        rep.flags.append("witness failed validation")
    return rep


# -- structure-theorem checks ------------------------------------------------------

def treedepth_bound_quadratic(q: int, r: int) -> int:
    """Treedepth bound for connected, non-subcubic, quasi-bridgeless S_{1,1,q,r}-free graphs."""
    return 2 * (q + r + 3) ** 2 + 6


def treedepth_bound_linear(r: int) -> int:
    """Treedepth bound for connected, non-subcubic S_{1,1,1,r}-free graphs."""
    return 2 * r + 2


@dataclass
class StructureReport:
    q: int
    r: int
    subcubic: bool
    quasi_bridgeless: bool
    free_s11qr: bool
    free_s111r: bool
    treedepth: int | None
    treedepth_exact: bool
    bound_quadratic: int
    bound_linear: int
    premise_quadratic: bool
    premise_linear: bool
    holds_quadratic: bool | None
    holds_linear: bool | None

    @property
    def inconclusive(self) -> bool:
        return not self.treedepth_exact

    def to_dict(self) -> dict:
        return dict(self.__dict__, inconclusive=self.inconclusive)


def check_structure_theorem(g: Graph, q: int = 1, r: int = 1, td_cap: int = TREEDEPTH_CAP) -> StructureReport:
    """Evaluate both treedepth bounds (premises and conclusions) on ``g``.

    A bound "holds" when its premise is false (vacuous) or the exact treedepth
    is within it; it is None when the treedepth could not be computed exactly.
    """
    if not g.is_connected():
        raise ValidationError("structure checks need a connected graph")
    if q < 1 or r < 1:
        raise ValidationError("q and r must be positive")
    subcubic = g.is_subcubic()
    qb = not bridges_and_blocks(g).proper_bridges
    free_qr = contains_spider(g, SpiderPattern(1, 1, q, r)) is None
    free_r = contains_spider(g, SpiderPattern(1, 1, 1, r)) is None
    td = treedepth(g, td_cap)
    prem_q = (not subcubic) and qb and free_qr
    prem_r = (not subcubic) and free_r
    bq, br = treedepth_bound_quadratic(q, r), treedepth_bound_linear(r)

    def verdict(premise, bound):
        if not premise:
            return True
        if not td.exact:
            return True if td.value <= bound else None
        return td.value <= bound

    return StructureReport(q, r, subcubic, qb, free_qr, free_r, td.value, td.exact, bq, br,
                           prem_q, prem_r, verdict(prem_q, bq), verdict(prem_r, br))


# -- classification of pattern graphs --------------------------------------------------

class Complexity(str, enum.Enum):
    POLY = "PolynomialTime"
    NPC = "NPComplete"
    OPEN = "Open"


def _is_path(h: Graph) -> bool:
    return h.is_connected() and h.is_forest() and h.max_degree() <= 2


def _is_subdivided_claw(h: Graph) -> bool:
    return h.is_connected() and h.is_forest() and h.max_degree() == 3 and \
        sum(1 for v in range(h.n) if h.degree(v) == 3) == 1


def _spider_legs(h: Graph) -> tuple[int, ...] | None:
    """Tentacle lengths if ``h`` is a tree with exactly one branch vertex."""
    if not (h.is_connected() and h.is_forest()):
        return None
    branch = [v for v in range(h.n) if h.degree(v) >= 3]
    if len(branch) != 1:
        return None
    c = branch[0]
    legs = []
    for first in h.adj[c]:
        prev, cur, length = c, first, 1
        while h.degree(cur) == 2:
            prev, cur = cur, next(w for w in h.adj[cur] if w != prev)
            length += 1
        legs.append(length)
    return tuple(sorted(legs, reverse=True))


def classify_h(h: Graph, cap: int = 12) -> dict[str, str]:
    """Complexity of the five problems on H-subgraph-free graphs, for connected H."""
    if h.n > cap:
        raise CapacityError(f"classify_h: pattern has {h.n} vertices, cap is {cap}", h.n, cap)
    if not h.is_connected():
        raise ValidationError("classify_h needs a connected pattern graph")
    has_cycle = not h.is_forest()
    legs = _spider_legs(h)
    in_s = _is_path(h) or _is_subdivided_claw(h)
    s11qr = legs is not None and len(legs) == 4 and legs[2] == 1 and legs[3] == 1
    easy = in_s or s11qr
    branch = sum(1 for v in range(h.n) if h.degree(v) >= 3)
    is_k15 = h.max_degree() >= 5
    is_s2222 = contains_spider(h, SpiderPattern(2, 2, 2, 2)) is not None
    out = {}
    fvs = Complexity.POLY if easy else Complexity.NPC if (has_cycle or branch > 1 or is_k15 or is_s2222) \
        else Complexity.OPEN
    out["fvs"] = out["ifvs"] = fvs.value
    cvc = Complexity.POLY if easy else Complexity.NPC if (has_cycle or is_k15) else Complexity.OPEN
    out["cvc"] = out["matchingcut"] = cvc.value
    small_forest = h.is_forest() and h.max_degree() <= 4 and h.n <= 7
    col = Complexity.POLY if (easy or small_forest) else \
        Complexity.NPC if (has_cycle or is_k15 or is_s2222) else Complexity.OPEN
    out["colouring"] = col.value
    return out
