"""Subgraph containment with witnesses: a generic backtracking matcher and a
specialised search for subdivided stars S_{w,x,y,z}."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, ValidationError
from .generators import spider
from .graph import Graph

PATTERN_CAP = 12

Embedding = dict  # pattern vertex -> host vertex


@dataclass(frozen=True)
class SpiderPattern:
    """Tentacle lengths (in edges), stored sorted in descending order."""

    lengths: tuple[int, int, int, int]

    def __init__(self, *lengths):
        if len(lengths) == 1 and not isinstance(lengths[0], int):
            lengths = tuple(lengths[0])
        if len(lengths) != 4:
            raise ValidationError("a spider pattern has exactly four tentacles")
        vals = tuple(sorted((int(x) for x in lengths), reverse=True))
        if vals[-1] < 1:
            raise ValidationError("tentacle lengths must be >= 1")
        object.__setattr__(self, "lengths", vals)

    @classmethod
    def parse(cls, text: str) -> "SpiderPattern":
        try:
            return cls(*(int(p) for p in text.replace(" ", "").split(",")))
        except ValueError:
            raise ValidationError(f"bad spider pattern {text!r}; expected w,x,y,z") from None

    def graph(self) -> Graph:
        return spider(*self.lengths)

    @property
    def order(self) -> int:
        return 1 + sum(self.lengths)

    def __str__(self):
        return "S_{%d,%d,%d,%d}" % self.lengths


def verify_embedding(host: Graph, pattern: Graph, emb: Embedding) -> bool:
    """Injective, total on the pattern, and edge-preserving."""
    if sorted(emb) != list(range(pattern.n)):
        return False
    if len(set(emb.values())) != len(emb):
        return False
    return all(host.has_edge(emb[u], emb[v]) for u, v in pattern.edges)


def _match_order(pattern: Graph) -> list[int]:
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < pattern.n:
        rest = [v for v in range(pattern.n) if v not in placed]
        linked = [v for v in rest if any(w in placed for w in pattern.adj[v])]
        pool = linked or rest
        v = min(pool, key=lambda x: (-sum(w in placed for w in pattern.adj[x]), -pattern.degree(x), x))
        order.append(v)
        placed.add(v)
    return order


def contains_subgraph(host: Graph, pattern: Graph, cap: int = PATTERN_CAP) -> Embedding | None:
    """A (not necessarily induced) copy of ``pattern`` in ``host``, or None."""
    if pattern.n > cap:
        raise CapacityError(f"pattern has {pattern.n} vertices, cap is {cap}", pattern.n, cap)
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern.max_degree() > host.max_degree():
        return None
    order = _match_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in pattern.adj[v] if pos[w] < pos[v]] for v in order]
    need = [pattern.degree(v) for v in order]
    emb: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        back = earlier[i]
        cands = host.adj[emb[back[0]]] if back else range(host.n)
        for h in cands:
            if h in used or host.degree(h) < need[i]:
                continue
            if any(not host.has_edge(h, emb[q]) for q in back[1:]):
                continue
            emb[p] = h
            used.add(h)
            if extend(i + 1):
                return True
            used.discard(h)
            del emb[p]
        return False

    if extend(0):
        return dict(sorted(emb.items()))
    return None


def contains_spider(host: Graph, p: SpiderPattern, centres=None) -> Embedding | None:
    """Embedding of ``p.graph()`` into ``host``, or None.

    Centres (all vertices, or only those given) are tried by decreasing degree;
    each tentacle is a simple path starting at an unused neighbour of the
    centre, found by backtracking.
    """
    lengths = p.lengths
    pool = range(host.n) if centres is None else set(centres)
    centres = sorted((v for v in pool if host.degree(v) >= 4), key=lambda v: (-host.degree(v), v))
    for c in centres:
        used = {c}
        paths: list[list[int]] = []

        def grow(path: list[int], remaining: int, i: int) -> bool:
            if remaining == 0:
                paths.append(list(path))
                if place(i + 1):
                    return True
                paths.pop()
                return False
            for w in host.adj[path[-1]]:
                if w in used:
                    continue
                used.add(w)
                path.append(w)
                if grow(path, remaining - 1, i):
                    return True
                path.pop()
                used.discard(w)
            return False

        def place(i: int) -> bool:
            if i == 4:
                return True
            lower = paths[i - 1][0] if i and lengths[i] == lengths[i - 1] else -1
            for a in host.adj[c]:
                if a in used or a <= lower:
                    continue
                used.add(a)
                if grow([a], lengths[i] - 1, i):
                    return True
                used.discard(a)
            return False

        if place(0):
            emb = {0: c}
            nxt = 1
            for path in paths:
                for v in path:
                    emb[nxt] = v
                    nxt += 1
            return emb
    return None


def is_spider_free_class_witness(host: Graph, p: SpiderPattern) -> tuple[bool, Embedding | None]:
    """(True, None) if ``host`` is S_p-subgraph-free, else (False, witness)."""
    emb = contains_spider(host, p)
    return emb is None, emb
