"""Independent test-side oracles: deliberately dumb implementations used to
freeze expected values and to cross-check the library's faster routes."""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def bfs_distances(vertices, edges):
    """Plain BFS all-pairs distances from an edge list."""
    adj = {v: set() for v in vertices}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    out = {}
    for s in vertices:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for t in vertices:
            out[(s, t)] = dist[t]
    return out


def enumerate_balls(vertices, edges):
    """All distinct balls as frozensets."""
    dist = bfs_distances(vertices, edges)
    diam = max(dist.values())
    balls = set()
    for v in vertices:
        for r in range(diam + 1):
            balls.add(frozenset(w for w in vertices if dist[(v, w)] <= r))
    return sorted(balls, key=lambda b: sorted(map(str, b)))


def dumb_is_helly(vertices, edges, max_family_size=None):
    """Unpruned enumeration over every ball subfamily up to the size cap."""
    balls = enumerate_balls(vertices, edges)
    cap = max_family_size if max_family_size is not None else len(balls)
    for k in range(2, cap + 1):
        for family in itertools.combinations(balls, k):
            if any(
                not (family[i] & family[j])
                for i in range(k)
                for j in range(i + 1, k)
            ):
                continue
            inter = set(family[0])
            for b in family[1:]:
                inter &= b
            if not inter:
                return False
    return True


def brute_min_mean_cycle(nodes, arcs):
    """Minimum mean over all simple directed cycles, or None when acyclic.

    ``arcs`` is a list of (u, v, weight); parallel arcs collapse to the
    minimum weight as cycles never benefit from a heavier parallel arc.
    """
    index = {v: i for i, v in enumerate(nodes)}
    weight = {}
    for u, v, w in arcs:
        key = (index[u], index[v])
        w = Fraction(w)
        if key not in weight or w < weight[key]:
            weight[key] = w
    succ = {}
    for (u, v), w in weight.items():
        succ.setdefault(u, []).append((v, w))
    best = None
    n = len(nodes)

    def walk(start, current, seen, total, length):
        nonlocal best
        for v, w in succ.get(current, ()):  # noqa: B020
            if v == start:
                mean = (total + w) / (length + 1)
                if best is None or mean < best:
                    best = mean
            elif v > start and v not in seen:
                walk(start, v, seen | {v}, total + w, length + 1)

    for s in range(n):
        walk(s, s, frozenset(), Fraction(0), 0)
    return best


def cramer_solve(A, y):
    """Exact solve by cofactor-expansion determinants and Cramer's rule."""
    n = len(A)
    rows = [[Fraction(x) for x in row] for row in A]

    def det(mat):
        size = len(mat)
        memo = {}

        def rec(row, colmask):
            if row == size:
                return Fraction(1)
            key = (row, colmask)
            if key in memo:
                return memo[key]
            total = Fraction(0)
            sign = 1
            for c in range(size):
                if colmask >> c & 1:
                    continue
                if mat[row][c]:
                    total += sign * mat[row][c] * rec(row + 1, colmask | 1 << c)
                sign = -sign
            memo[key] = total
            return total

        return rec(0, 0)

    d = det(rows)
    if d == 0:
        return None
    out = []
    for i in range(n):
        replaced = [row[:i] + [Fraction(yv)] + row[i + 1 :] for row, yv in zip(rows, y)]
        out.append(det(replaced) / d)
    return tuple(out)


def min_ratio_cycle(periodic):
    """min length/|net voltage| over vertex-simple cycles of the quotient.

    This equals the deck translation length: every cover path projects to
    a closed walk, closed walks decompose into vertex-simple cycles, and
    the positive-voltage part of any decomposition dominates n.
    """
    arcs = []
    for u, v, z in periodic.voltages:
        arcs.append((u, v, z))
        arcs.append((v, u, -z))
    best = None

    def walk(start, current, seen, length, net):
        nonlocal best
        for u, v, z in arcs:
            if u != current:
                continue
            if v == start:
                if net + z != 0:
                    ratio = Fraction(length + 1, abs(net + z))
                    if best is None or ratio < best:
                        best = ratio
            elif v not in seen:
                walk(start, v, seen | {v}, length + 1, net + z)

    for s in periodic.quotient.vertices:
        walk(s, s, frozenset([s]), 0, 0)
    return best


def all_automorphisms(g):
    """Every automorphism of a small graph, via degree-class products."""
    from hellygraph.automorphisms import Automorphism

    vs = g.vertices
    n = len(vs)
    degree = {v: len(g.neighbors(v)) for v in vs}
    classes = {}
    for v in vs:
        classes.setdefault(degree[v], []).append(v)
    blocks = [classes[d] for d in sorted(classes)]
    edges = set(map(frozenset, g.edges()))
    out = []
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        mapping = {}
        for block, perm in zip(blocks, perms):
            mapping.update(zip(block, perm))
        if all(frozenset((mapping[u], mapping[v])) in edges for u, v in g.edges()):
            out.append(Automorphism(domain=vs, images=tuple(mapping[v] for v in vs)))
    return out
