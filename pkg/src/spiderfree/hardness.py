"""Hard FVS/IFVS instances from 2P1N formulas.

Each variable becomes a 12-vertex gadget (two triangles for the positive
occurrences, a diamond for the negative one, and a hub pair p, q); each clause
becomes a hexagon (three literals) or a square (two literals) whose alternate
vertices are identified with the gadget terminals x, y (positive) and z
(negative). The result has maximum degree 4, contains no S_{2,2,2,2}, and has
an (independent) FVS of size 4n exactly when the formula is satisfiable.

The gadget's edge set is the first candidate passing a brute-force checklist
(P1-P7 below); it is stored in ``data/variable_gadget.json`` and re-verified
whenever it is loaded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .checks import is_fvs, is_ifvs
from .cnf import CnfFormula, sat_2p1n
from .errors import ValidationError
from .graph import Graph
from .oracles import CAPS, OracleCaps, oracle_min_fvs, oracle_min_ifvs
from .subgraph import SpiderPattern, contains_spider

LABELS = ("x", "x'", "a", "y", "y'", "b", "z", "s", "t", "c", "p", "q")
IDX = {lab: i for i, lab in enumerate(LABELS)}
TERMINALS = ("x", "y", "z")
TRUE_SET = ("x", "y", "p", "t")
FALSE_SET = ("z", "a", "b", "c")
S2222 = SpiderPattern(2, 2, 2, 2)

_FIXED = [("x", "x'"), ("x", "a"), ("x'", "a"), ("y", "y'"), ("y", "b"), ("y'", "b")]


# -- checklist -------------------------------------------------------------------

def _cycles(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of all simple cycles (small graphs only)."""
    found = set()
    for s in range(g.n):
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in g.adj[v]:
                if w == s and len(path) >= 3:
                    found.add((frozenset(path), tuple(sorted(_cycle_edges(path)))))
                elif w > s and w not in path:
                    stack.append((w, path + [w]))
    return sorted({vs for vs, _ in found}, key=sorted)


def _cycle_edges(path):
    return [tuple(sorted((path[i], path[(i + 1) % len(path)]))) for i in range(len(path))]


def _disjoint_cycles(cycles, k: int) -> bool:
    def rec(start, used, left):
        if left == 0:
            return True
        for i in range(start, len(cycles)):
            if not (cycles[i] & used) and rec(i + 1, used | cycles[i], left - 1):
                return True
        return False

    return rec(0, frozenset(), k)


def with_clause_stubs(g: Graph) -> tuple[Graph, dict[str, list[int]]]:
    """The gadget with each terminal given two clause neighbours, each of which
    continues to a fresh vertex (what a hexagon looks like locally)."""
    edges = list(g.edges)
    nxt = g.n
    stubs = {}
    for lab in TERMINALS:
        v = IDX[lab]
        stubs[lab] = []
        for _ in range(2):
            edges += [(v, nxt), (nxt, nxt + 1)]
            stubs[lab].append(nxt)
            nxt += 2
    return Graph(nxt, edges), stubs


def _within(g: Graph, v: int, radius: int) -> set[int]:
    return {w for w, d in g.bfs_distances(v).items() if d <= radius}


def _separates(g: Graph, v: int, cut) -> bool:
    rest = set(range(g.n)) - set(cut)
    comp = g.component_sets(rest)
    return not any(v in c and len(c) == len(rest) for c in comp)


def gadget_checklist(g: Graph) -> dict[str, bool]:
    """Evaluate P1-P7 on a candidate gadget (vertex ids follow ``LABELS``)."""
    L = IDX
    out = {}
    cycles = _cycles(g)
    out["P1_four_disjoint_cycles"] = _disjoint_cycles(cycles, 4)
    tri = all(g.has_edge(L[u], L[v]) for u, v in _FIXED)
    diamond = [L["z"], L["s"], L["c"], L["t"]]
    ring = all(g.has_edge(diamond[i], diamond[(i + 1) % 4]) for i in range(4))
    out["P2_triangles_and_diamond"] = tri and ring
    out["P3_two_ifvs"] = all(is_ifvs(g, [L[x] for x in s]) for s in (TRUE_SET, FALSE_SET))
    bad_pairs = [(L["x"], L["z"]), (L["y"], L["z"])]
    out["P4_no_fvs4_with_xz_or_yz"] = not any(
        is_fvs(g, f) for f in combinations(range(g.n), 4) if any(a in f and b in f for a, b in bad_pairs))
    out["P5_cycles_through_terminals"] = all(
        L["a"] in c for c in cycles if L["x"] in c) and all(L["b"] in c for c in cycles if L["y"] in c)
    stubbed, stubs = with_clause_stubs(g)
    cuts = {"p": ("a", "b", "c"), "q": ("a", "b", "c"), "a": ("x", "p", "q"),
            "b": ("y", "p", "q"), "c": ("z", "p", "q")}
    ok = True
    for v, cut in cuts.items():
        ids = [L[x] for x in cut]
        ok &= set(ids) <= _within(stubbed, L[v], 2) and _separates(stubbed, L[v], ids)
    for lab, anchor in (("x", "a"), ("y", "b"), ("z", "c")):
        ids = stubs[lab] + [L[anchor]]
        ok &= set(ids) <= _within(stubbed, L[lab], 2) and _separates(stubbed, L[lab], ids)
    ok &= contains_spider(stubbed, S2222, centres=range(g.n)) is None
    out["P6_local_cuts"] = bool(ok)
    out["P7_max_degree_4"] = stubbed.max_degree() <= 4
    return out


# -- candidate search and the frozen gadget ----------------------------------------------

def gadget_candidates():
    """Candidate edge lists, most prose-like first: diamond variants of
    {z,s,t,c} (z keeps two edges there), then 4-cycles; then p, q attached to
    subsets of {a, b, c}, fuller attachments first, with or without pq."""
    quad = ("z", "s", "t", "c")
    all_pairs = list(combinations(quad, 2))
    shapes = []
    for missing in (("z", "c"), ("z", "s"), ("z", "t")):
        shapes.append([e for e in all_pairs if e != missing])
    for ring in (("z", "s", "c", "t"), ("z", "s", "t", "c"), ("z", "t", "s", "c")):
        shapes.append([tuple(sorted((ring[i], ring[(i + 1) % 4]), key=quad.index)) for i in range(4)])
    hubs = [frozenset(c) for k in (3, 2, 1) for c in combinations(("a", "b", "c"), k)]
    for shape in shapes:
        for np_ in hubs:
            for nq in hubs:
                for pq in (True, False):
                    extra = [("p", h) for h in sorted(np_)] + [("q", h) for h in sorted(nq)]
                    if pq:
                        extra.append(("p", "q"))
                    yield _FIXED + shape + extra


def _graph_of(edges) -> Graph:
    return Graph(len(LABELS), [(IDX[u], IDX[v]) for u, v in edges], dict(enumerate(LABELS)))


def search_variable_gadget(limit: int | None = None) -> list[tuple[str, str]]:
    """First candidate edge list passing the whole checklist."""
    for i, edges in enumerate(gadget_candidates()):
        if limit is not None and i >= limit:
            break
        if all(gadget_checklist(_graph_of(edges)).values()):
            return sorted(tuple(sorted(e, key=IDX.get)) for e in edges)
    raise ValidationError("no gadget candidate passes the checklist")


@dataclass(frozen=True)
class VariableGadget:
    graph: Graph
    checklist: dict[str, bool]

    def vertex(self, label: str) -> int:
        return IDX[label]


@lru_cache(maxsize=1)
def build_variable_gadget() -> VariableGadget:
    """Load the frozen gadget and re-check it against P1-P7."""
    data = json.loads(resources.files("spiderfree").joinpath("data/variable_gadget.json").read_text())
    if tuple(data["labels"]) != LABELS:
        raise ValidationError("gadget data file has unexpected labels")
    g = _graph_of(data["edges"])
    checks = gadget_checklist(g)
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise AssertionError(f"variable gadget fails {failed}")
    return VariableGadget(g, checks)


# -- the reduction ---------------------------------------------------------------

@dataclass
class ReductionOutput:
    graph: Graph
    threshold: int
    literal_map: list[dict]
    provenance: str
    gadgets: list[dict[str, int]] = field(default_factory=list)

    def sidecar(self) -> dict:
        return {"threshold": self.threshold, "formula_digest": self.provenance,
                "graph_digest": self.graph.digest(), "n": self.graph.n, "m": self.graph.m,
                "literal_map": self.literal_map, "gadgets": self.gadgets}


def reduce(phi: CnfFormula, check: bool = True) -> ReductionOutput:
    """Build the FVS instance for ``phi``; threshold 4n."""
    phi.validate()
    gadget = build_variable_gadget().graph
    n = phi.n
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    gadgets = []
    for i in range(n):
        off = 12 * i
        edges += [(u + off, v + off) for u, v in gadget.edges]
        gadgets.append({lab: off + IDX[lab] for lab in LABELS})
        for lab in LABELS:
            labels[off + IDX[lab]] = f"v{i + 1}.{lab}"
    nxt = 12 * n
    seen_pos = [0] * (n + 1)
    literal_map = []
    for j, clause in enumerate(phi.clauses):
        slots = []
        for lit in clause:
            var = abs(lit)
            if lit > 0:
                role = "x" if seen_pos[var] == 0 else "y"
                seen_pos[var] += 1
            else:
                role = "z"
            vid = gadgets[var - 1][role]
            slots.append(vid)
            literal_map.append({"clause": j + 1, "literal": lit, "role": role, "vertex": vid})
        ring = []
        for k, vid in enumerate(slots):
            ring += [vid, nxt]
            labels[nxt] = f"c{j + 1}.{k}"
            nxt += 1
        edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    g = Graph(nxt, edges, labels)
    out = ReductionOutput(g, 4 * n, literal_map, phi.digest(), gadgets)
    if check:
        assert g.max_degree() <= 4, "reduction output exceeds degree 4"
        assert contains_spider(g, S2222) is None, "reduction output contains S_{2,2,2,2}"
    return out


def assignment_set(red: ReductionOutput, assignment: dict[int, bool]) -> frozenset[int]:
    """x, y, p, t for true variables and z, a, b, c for false ones."""
    chosen = set()
    for i, gad in enumerate(red.gadgets):
        chosen.update(gad[lab] for lab in (TRUE_SET if assignment[i + 1] else FALSE_SET))
    return frozenset(chosen)


@dataclass
class ReductionReport:
    n: int
    threshold: int
    vertices: int
    satisfiable: bool
    min_fvs: int
    min_ifvs: int | None
    max_degree: int
    s2222_free: bool
    assignment_set_valid: bool | None

    @property
    def fvs_equivalent(self) -> bool:
        return self.satisfiable == (self.min_fvs <= self.threshold)

    @property
    def ifvs_equivalent(self) -> bool:
        return self.satisfiable == (self.min_ifvs is not None and self.min_ifvs <= self.threshold)

    @property
    def ok(self) -> bool:
        return self.fvs_equivalent and self.ifvs_equivalent and self.max_degree <= 4 and self.s2222_free \
            and self.assignment_set_valid is not False

    def to_dict(self) -> dict:
        return dict(self.__dict__, fvs_equivalent=self.fvs_equivalent,
                    ifvs_equivalent=self.ifvs_equivalent, ok=self.ok)


def verify_reduction(phi: CnfFormula, caps: OracleCaps = CAPS) -> ReductionReport:
    """Check SAT <=> min FVS <= 4n <=> min IFVS <= 4n with the oracles."""
    red = reduce(phi, check=False)
    g = red.graph
    assignment = sat_2p1n(phi)
    fvs = oracle_min_fvs(g, caps)
    ifvs = oracle_min_ifvs(g, caps)
    constructed = None
    if assignment is not None:
        s = assignment_set(red, assignment)
        constructed = len(s) == red.threshold and is_ifvs(g, s)
    return ReductionReport(phi.n, red.threshold, g.n, assignment is not None, len(fvs),
                           None if ifvs is None else len(ifvs), g.max_degree(),
                           contains_spider(g, S2222) is None, constructed)
