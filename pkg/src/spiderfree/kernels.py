"""Bitmask kernels for the exhaustive oracles and the small-graph exact routines.

All kernels take the neighbour-mask array of a graph (``Graph.masks``, one
int64 per vertex) and its vertex count. Vertex ``v`` is bit ``v``. Subset
enumeration visits sets by increasing size and, within a size, in
lexicographic order of the sorted vertex tuple, so the first hit is the
lexicographically least optimum.
"""

import numpy as np

from ._accel import njit


@njit
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit
def _forest_without(eu, ev, n, removed, parent):
    for i in range(n):
        parent[i] = i
    for i in range(eu.shape[0]):
        u = eu[i]
        v = ev[i]
        if (removed >> u) & 1 or (removed >> v) & 1:
            continue
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


@njit
def _connected_mask(masks, s):
    if s == 0:
        return True
    low = s & (-s)
    reach = low
    while True:
        grow = reach
        x = reach
        while x:
            b = x & (-x)
            v = 0
            while (b >> v) != 1:
                v += 1
            grow |= masks[v] & s
            x ^= b
        if grow == reach:
            break
        reach = grow
    return reach == s


@njit
def _independent(masks, s):
    x = s
    while x:
        b = x & (-x)
        v = 0
        while (b >> v) != 1:
            v += 1
        if masks[v] & s:
            return False
        x ^= b
    return True


@njit
def min_feedback_set(masks, eu, ev, n, independent, forced):
    """Least FVS (optionally independent) containing ``forced``; -1 if none exists."""
    parent = np.empty(max(n, 1), dtype=np.int64)
    free = np.empty(n, dtype=np.int64)
    nf = 0
    for v in range(n):
        if not (forced >> v) & 1:
            free[nf] = v
            nf += 1
    idx = np.empty(max(nf, 1), dtype=np.int64)
    for k in range(nf + 1):
        for i in range(k):
            idx[i] = i
        while True:
            s = forced
            for i in range(k):
                s |= np.int64(1) << free[idx[i]]
            if (not independent or _independent(masks, s)) and _forest_without(eu, ev, n, s, parent):
                return s
            i = k - 1
            while i >= 0 and idx[i] == nf - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return -1


@njit
def min_connected_cover(masks, eu, ev, n, forced):
    """Least connected vertex cover containing ``forced``; -1 if none exists."""
    free = np.empty(n, dtype=np.int64)
    nf = 0
    for v in range(n):
        if not (forced >> v) & 1:
            free[nf] = v
            nf += 1
    idx = np.empty(max(nf, 1), dtype=np.int64)
    for k in range(nf + 1):
        for i in range(k):
            idx[i] = i
        while True:
            s = forced
            for i in range(k):
                s |= np.int64(1) << free[idx[i]]
            ok = True
            for e in range(eu.shape[0]):
                if not ((s >> eu[e]) & 1 or (s >> ev[e]) & 1):
                    ok = False
                    break
            if ok and _connected_mask(masks, s):
                return s
            i = k - 1
            while i >= 0 and idx[i] == nf - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return -1


@njit
def matching_cut_side(masks, n):
    """Side A (containing vertex 0) of the first bipartition whose crossing edges
    form a matching; -1 if there is none. Assumes a connected graph."""
    if n < 2:
        return -1
    full = (np.int64(1) << n) - 1
    for x in range((np.int64(1) << (n - 1)) - 1):
        a = (np.int64(x) << 1) | 1
        b = full ^ a
        ok = True
        for v in range(n):
            other = b if (a >> v) & 1 else a
            y = masks[v] & other
            if y & (y - 1):
                ok = False
                break
        if ok:
            return a
    return -1


@njit
def treedepth_table(masks, n):
    """Treedepth of every vertex subset (index = subset mask)."""
    size = np.int64(1) << n
    td = np.zeros(size, dtype=np.int8)
    for s in range(1, size):
        low = s & (-s)
        reach = low
        while True:
            grow = reach
            x = reach
            while x:
                b = x & (-x)
                v = 0
                while (b >> v) != 1:
                    v += 1
                grow |= masks[v] & s
                x ^= b
            if grow == reach:
                break
            reach = grow
        if reach != s:
            a = td[reach]
            c = td[s ^ reach]
            td[s] = a if a > c else c
            continue
        best = 127
        x = s
        while x:
            b = x & (-x)
            t = td[s ^ b]
            if t < best:
                best = t
            x ^= b
        td[s] = best + 1
    return td


@njit
def longest_path_edges(masks, n):
    """Maximum number of edges on a simple path (subset DP over path vertex sets)."""
    if n == 0:
        return 0
    size = np.int64(1) << n
    ends = np.zeros(size, dtype=np.int64)
    for v in range(n):
        ends[np.int64(1) << v] = np.int64(1) << v
    best = 0
    for s in range(1, size):
        e = ends[s]
        if e == 0:
            continue
        c = 0
        y = s
        while y:
            y &= y - 1
            c += 1
        if c - 1 > best:
            best = c - 1
            if best == n - 1:
                return best
        x = e
        while x:
            b = x & (-x)
            v = 0
            while (b >> v) != 1:
                v += 1
            nxt = masks[v] & ~s
            while nxt:
                w = nxt & (-nxt)
                ends[s | w] |= w
                nxt ^= w
            x ^= b
    return best
