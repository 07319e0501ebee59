"""Named graph families and exhaustive corpora of small connected graphs."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Graph


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    vs = [str(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with center ``c`` and leaves ``1..leaves``."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    vs = ["c"] + [str(i) for i in range(1, leaves + 1)]
    return Graph(vs, [("c", v) for v in vs[1:]])


def king_grid(rows: int, cols: int) -> Graph:
    """Window of the king lattice: vertices ``r,c`` adjacent at l-infinity 1."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    vs = ["%d,%d" % (r, c) for r in range(rows) for c in range(cols)]
    edges = []
    for r in range(rows):
        for c in range(cols):
            for dr, dc in ((0, 1), (1, -1), (1, 0), (1, 1)):
                r2, c2 = r + dr, c + dc
                if 0 <= r2 < rows and 0 <= c2 < cols:
                    edges.append(("%d,%d" % (r, c), "%d,%d" % (r2, c2)))
    return Graph(vs, edges)


# --- isomorph-free enumeration of small connected graphs -------------------
#
# Graphs on n vertices are encoded as bitmasks over the pairs (i, j), i < j.
# Canonical form: minimum mask over all relabelings compatible with the
# stable degree-refinement coloring (color classes cut the permutation
# count far below n!).


def _pair_bit(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _mask_to_adj(mask: int, n: int):
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> _pair_bit(i, j, n) & 1:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def _refine_colors(n: int, adj) -> list:
    colors = [len(adj[i]) for i in range(n)]
    while True:
        keys = [(colors[i], tuple(sorted(colors[j] for j in adj[i]))) for i in range(n)]
        palette = {k: c for c, k in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _canonical_mask(mask: int, n: int) -> int:
    adj = _mask_to_adj(mask, n)
    colors = _refine_colors(n, adj)
    classes = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    blocks = [classes[c] for c in sorted(classes)]
    starts = []
    pos = 0
    for b in blocks:
        starts.append(pos)
        pos += len(b)
    edges = [(i, j) for i in range(n) for j in adj[i] if i < j]
    best = None
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        target = [0] * n
        for block_perm, start in zip(perms, starts):
            for offset, v in enumerate(block_perm):
                target[v] = start + offset
        m = 0
        for i, j in edges:
            m |= 1 << _pair_bit(target[i], target[j], n)
        if best is None or m < best:
            best = m
    return best if best is not None else 0


def _mask_connected(mask: int, n: int) -> bool:
    adj = _mask_to_adj(mask, n)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


@lru_cache(maxsize=None)
def _connected_masks(n: int) -> tuple:
    if n == 1:
        return (0,)
    out = set()
    for parent in _connected_masks(n - 1):
        base = 0
        for i in range(n - 1):
            for j in range(i + 1, n - 1):
                if parent >> _pair_bit(i, j, n - 1) & 1:
                    base |= 1 << _pair_bit(i, j, n)
        for subset in range(1, 1 << (n - 1)):
            mask = base
            for i in range(n - 1):
                if subset >> i & 1:
                    mask |= 1 << _pair_bit(i, n - 1, n)
            out.add(_canonical_mask(mask, n))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _tree_masks(n: int) -> tuple:
    if n == 1:
        return (0,)
    out = set()
    for parent in _tree_masks(n - 1):
        base = 0
        for i in range(n - 1):
            for j in range(i + 1, n - 1):
                if parent >> _pair_bit(i, j, n - 1) & 1:
                    base |= 1 << _pair_bit(i, j, n)
        for attach in range(n - 1):
            mask = base | 1 << _pair_bit(attach, n - 1, n)
            out.add(_canonical_mask(mask, n))
    return tuple(sorted(out))


def _mask_to_graph(mask: int, n: int) -> Graph:
    vs = [str(i) for i in range(n)]
    edges = [
        (vs[i], vs[j])
        for i in range(n)
        for j in range(i + 1, n)
        if mask >> _pair_bit(i, j, n) & 1
    ]
    return Graph(vs, edges)


def enumerate_connected_graphs(n: int) -> tuple:
    """All connected graphs on exactly ``n`` vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    return tuple(_mask_to_graph(m, n) for m in _connected_masks(n))


def enumerate_trees(n: int) -> tuple:
    """All trees on exactly ``n`` vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    return tuple(_mask_to_graph(m, n) for m in _tree_masks(n))
