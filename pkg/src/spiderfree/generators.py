"""Deterministic and seeded random graph generators."""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .graph import Graph, disjoint_union


def path(n: int) -> Graph:
    if n < 1:
        raise ValidationError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValidationError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValidationError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(s: int) -> Graph:
    """K_{1,s} with centre 0."""
    if s < 1:
        raise ValidationError("star needs s >= 1")
    return Graph(s + 1, [(0, i) for i in range(1, s + 1)])


def spider(*lengths: int) -> Graph:
    """Subdivided star with centre 0 and one tentacle per length.

    Tentacle ``i`` occupies consecutive ids, nearest-to-centre first.
    """
    if len(lengths) == 1 and not isinstance(lengths[0], int):
        lengths = tuple(lengths[0])
    if len(lengths) != 4 or any(int(x) < 1 for x in lengths):
        raise ValidationError("spider needs four tentacle lengths >= 1")
    edges, nxt = [], 1
    for length in lengths:
        prev = 0
        for _ in range(int(length)):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def theta(a: int, b: int, c: int) -> Graph:
    """Two branch vertices (0 and 1) joined by three paths with a, b, c internal vertices."""
    if sum(1 for x in (a, b, c) if x == 0) > 1:
        raise ValidationError("at most one theta path may be a direct edge")
    edges, nxt = [], 2
    for k in (a, b, c):
        seq = [0] + list(range(nxt, nxt + k)) + [1]
        nxt += k
        edges.extend(zip(seq, seq[1:]))
    return Graph(nxt, edges)


def _rng(seed) -> np.random.Generator:
    if seed is None:
        raise ValidationError("random generators need an explicit seed")
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def random_subcubic(n: int, seed: int, extra: float = 0.5) -> Graph:
    """Connected graph of max degree 3: random tree plus about ``extra * n`` chords."""
    if n < 1:
        raise ValidationError("n >= 1 required")
    rng = _rng(seed)
    deg = [0] * n
    edges = set()
    for v in range(1, n):
        cands = [u for u in range(v) if deg[u] < 3]
        u = int(cands[rng.integers(len(cands))])
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    tries = int(extra * n) * 4 + 4
    target = int(round(extra * n))
    added = 0
    for _ in range(tries):
        if added >= target:
            break
        free = [v for v in range(n) if deg[v] < 3]
        if len(free) < 2:
            break
        u, v = (int(x) for x in rng.choice(free, 2, replace=False))
        e = (min(u, v), max(u, v))
        if e in edges:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
        added += 1
    return Graph(n, edges)


def random_nice_cactus(cycles: int, seed: int, min_len: int = 3, max_len: int = 6,
                       pendant_prob: float = 0.3, very_nice: bool = False) -> Graph:
    """Subcubic nice cactus grown by hanging cycles (and pendant paths) off free vertices.

    With ``very_nice`` every vertex lies on exactly one cycle.
    """
    if cycles < 1:
        raise ValidationError("need at least one cycle")
    rng = _rng(seed)
    edges: list[tuple[int, int]] = []
    deg: list[int] = []

    def add_cycle(attach: int | None) -> None:
        k = int(rng.integers(min_len, max_len + 1))
        start = len(deg)
        deg.extend([2] * k)
        edges.extend((start + i, start + (i + 1) % k) for i in range(k))
        if attach is not None:
            edges.append((attach, start))
            deg[attach] += 1
            deg[start] += 1

    add_cycle(None)
    for _ in range(cycles - 1):
        if not very_nice and rng.random() < pendant_prob:
            free = [v for v in range(len(deg)) if deg[v] < 3]
            prev = int(free[rng.integers(len(free))])
            for _ in range(int(rng.integers(1, 3))):
                w = len(deg)
                deg.append(0)
                edges.append((prev, w))
                deg[prev] += 1
                deg[w] += 1
                prev = w
        free = [v for v in range(len(deg)) if deg[v] < 3]
        add_cycle(int(free[rng.integers(len(free))]))
    return Graph(len(deg), edges)


def random_quasi_bridgeless(n: int, seed: int, max_degree: int | None = None,
                            ears: int | None = None, pendants: int = 0) -> Graph:
    """Bridgeless core from a random ear decomposition, plus optional pendant vertices.

    Pendant bridges are not proper, so the result stays quasi-bridgeless. With a
    degree cap the core may stop growing early, giving fewer than ``n`` vertices.
    """
    rng = _rng(seed)
    core = n - pendants
    if core < 3:
        raise ValidationError("core needs at least 3 vertices")
    cap = max_degree or n
    first = int(rng.integers(3, core + 1))
    edges = {(min(i, (i + 1) % first), max(i, (i + 1) % first)) for i in range(first)}
    deg = [2] * first
    chords = ears if ears is not None else int(rng.integers(0, core))

    def pick_pair():
        free = [v for v in range(len(deg)) if deg[v] < cap]
        if len(free) < 2:
            return None
        u, v = (int(x) for x in rng.choice(free, 2, replace=False))
        return u, v

    def add_path(seq):
        for a, b in zip(seq, seq[1:]):
            edges.add((min(a, b), max(a, b)))
            deg[a] += 1
            deg[b] += 1

    while len(deg) < core:
        pair = pick_pair()
        if pair is None:
            break
        k = int(rng.integers(1, min(core - len(deg), 3) + 1))
        start = len(deg)
        deg.extend([0] * k)
        add_path([pair[0]] + list(range(start, start + k)) + [pair[1]])
    for _ in range(8 * chords):
        if chords <= 0:
            break
        pair = pick_pair()
        if pair is None:
            break
        e = (min(pair), max(pair))
        if e in edges:
            continue
        add_path(list(pair))
        chords -= 1
    for _ in range(pendants):
        free = [v for v in range(len(deg)) if deg[v] < cap]
        if not free:
            break
        u = int(free[rng.integers(len(free))])
        deg.append(0)
        add_path([u, len(deg) - 1])
    return Graph(len(deg), edges)


def random_block(size: int, rng: np.random.Generator) -> Graph:
    """A random 2-edge-connected block on ``size`` vertices (or a single vertex)."""
    if size == 1:
        return Graph(1)
    if size == 2:
        return Graph(2, [(0, 1)])
    kind = ("cycle", "dense", "subcubic", "subcubic", "free")[int(rng.integers(5))]
    if kind == "cycle":
        return cycle(size)
    if kind == "dense" and size >= 4:
        return complete(size) if size <= 5 else cycle(size).add_edges([(0, size // 2)])
    seed = int(rng.integers(1 << 62))
    degree_cap = 3 if kind == "subcubic" else None
    return random_quasi_bridgeless(size, seed, max_degree=degree_cap, ears=int(rng.integers(0, size)))


def _low_degree_vertex(b: Graph, rng: np.random.Generator) -> int:
    """A random vertex, biased towards those of least degree."""
    if rng.random() < 0.5:
        low = min(b.degree(v) for v in range(b.n))
        pool = [v for v in range(b.n) if b.degree(v) == low]
        return int(pool[rng.integers(len(pool))])
    return int(rng.integers(b.n))


def random_composite(max_n: int, seed: int) -> Graph:
    """Connected graph built from random blocks joined in a tree by bridges."""
    rng = _rng(seed)
    parts: list[Graph] = []
    total = 0
    while total < max_n:
        room = max_n - total
        size = int(rng.integers(1, min(room, 7) + 1))
        b = random_block(size, rng)
        if total + b.n > max_n:
            break
        parts.append(b)
        total += b.n
        if rng.random() < 0.25:
            break
    g = disjoint_union(*parts)
    offs = np.cumsum([0] + [p.n for p in parts])
    extra = []
    for i in range(1, len(parts)):
        j = int(rng.integers(i))
        u = int(offs[j] + _low_degree_vertex(parts[j], rng))
        v = int(offs[i] + _low_degree_vertex(parts[i], rng))
        extra.append((u, v))
    return g.add_edges(extra)


KINDS = ("path", "cycle", "complete", "star", "spider", "petersen",
         "nice-cactus", "very-nice-cactus", "subcubic", "quasi-bridgeless", "composite")


def generate(kind: str, *params, seed: int | None = None, **kw) -> Graph:
    """Dispatch by kind name; random kinds require ``seed``."""
    kind = kind.replace("_", "-").lower()
    try:
        if kind == "path":
            return path(*params)
        if kind == "cycle":
            return cycle(*params)
        if kind == "complete":
            return complete(*params)
        if kind == "star":
            return star(*params)
        if kind == "spider":
            return spider(*params)
        if kind == "petersen":
            return petersen()
        if kind == "nice-cactus":
            return random_nice_cactus(*params, seed=seed, **kw)
        if kind == "very-nice-cactus":
            return random_nice_cactus(*params, seed=seed, very_nice=True, **kw)
        if kind == "subcubic":
            return random_subcubic(*params, seed=seed, **kw)
        if kind == "quasi-bridgeless":
            return random_quasi_bridgeless(*params, seed=seed, **kw)
        if kind == "composite":
            return random_composite(*params, seed=seed)
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {kind}: {exc}") from None
    raise ValidationError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
