"""Round cliques, their poset, the first subdivision, and dimension.

A clique is round when it is an intersection of balls; equivalently it is
a vertex of the base graph or a nonempty intersection of maximal cliques.
Round cliques are the vertices of the first subdivision, and each round
clique A corresponds to a unique half-integer extremal function f_A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Optional

from .errors import HellyLibError, NotHellyError
from .graph import Graph, Vertex, ball, distinct_balls, is_clique, is_helly
from .hull import MetricFunction, SubdivisionGraph, is_extremal, metric_function

RoundClique = frozenset


def maximal_cliques(g: Graph, *, max_count: int = 10**6) -> list:
    """All inclusion-maximal cliques, Bron-Kerbosch with pivoting.

    Vertices are processed in degeneracy order at the outer level.  The
    enumeration aborts once more than ``max_count`` cliques appear.
    """
    n = g.vertex_count
    adj = [set(g._adj[i]) for i in range(n)]
    # degeneracy order: repeatedly remove a minimum-degree vertex
    degree = [len(adj[i]) for i in range(n)]
    removed = [False] * n
    order = []
    for _ in range(n):
        v = min(
            (i for i in range(n) if not removed[i]),
            key=lambda i: (degree[i], i),
        )
        removed[v] = True
        order.append(v)
        for u in adj[v]:
            if not removed[u]:
                degree[u] -= 1
    out = []

    def expand(clique, cands, excluded):
        if not cands and not excluded:
            out.append(frozenset(g.vertices[i] for i in clique))
            if len(out) > max_count:
                raise HellyLibError(
                    "maximal clique enumeration exceeded %d cliques" % max_count
                )
            return
        pivot = max(cands | excluded, key=lambda i: (len(adj[i] & cands), -i))
        for v in sorted(cands - adj[pivot]):
            expand(clique + [v], cands & adj[v], excluded & adj[v])
            cands = cands - {v}
            excluded = excluded | {v}

    later = set(range(n))
    for v in order:
        later.discard(v)
        expand([v], adj[v] & later, adj[v] - later)
    return sorted(out, key=lambda c: sorted(g.index(v) for v in c))


def _sort_key(g: Graph):
    return lambda c: tuple(sorted(g.index(v) for v in c))


@dataclass(frozen=True)
class CliquePoset:
    """Round cliques of a graph, ordered by inclusion."""

    elements: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, c) -> bool:
        return frozenset(c) in set(self.elements)

    def cover_relations(self) -> list:
        """Pairs (i, j) of element indices with elements[i] covered by [j]."""
        els = self.elements
        covers = []
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                if a < b and not any(a < c < b for c in els):
                    covers.append((i, j))
        return covers

    def maximal_chains(self) -> list:
        """All inclusion-maximal chains, each as a tuple small-to-large."""
        els = self.elements
        above = {a: [b for b in els if a < b] for a in els}
        minimal = [a for a in els if not any(b < a for b in els)]
        chains = []

        def grow(chain):
            last = chain[-1]
            succ = [b for b in above[last] if not any(last < c < b for c in els)]
            if not succ:
                chains.append(tuple(chain))
                return
            for b in succ:
                grow(chain + [b])

        for a in minimal:
            grow([a])
        return chains


def round_cliques(g: Graph, *, check_helly: bool = True) -> CliquePoset:
    """The poset of round cliques: singletons plus all nonempty
    intersections of families of maximal cliques.

    Computed as the closure of the maximal cliques under pairwise
    intersection (iterated to a fixed point), which realizes every
    subfamily intersection.
    """
    if check_helly:
        res = is_helly(g)
        if not res.helly:
            raise NotHellyError(res.witness)
    closure = set(maximal_cliques(g))
    frontier = list(closure)
    while frontier:
        fresh = []
        for a in frontier:
            for b in closure:
                c = a & b
                if c and c not in closure and c not in fresh:
                    fresh.append(c)
        closure.update(fresh)
        frontier = fresh
    for v in g.vertices:
        closure.add(frozenset([v]))
    return CliquePoset(elements=tuple(sorted(closure, key=_sort_key(g))))


def is_round(g: Graph, s: Iterable[Vertex]) -> bool:
    """Whether a clique is an intersection of balls.

    A set is an intersection of balls exactly when it equals the
    intersection of *all* balls containing it.  The excluding balls may be
    centered outside the clique: in the diamond K4 minus an edge, the two
    maximal cliques meet in the middle edge, which is cut out by the unit
    balls around the two non-adjacent corners only.
    """
    members = frozenset(s)
    if not members:
        raise ValueError("empty vertex set")
    if len(members) == 1:
        return True
    if not is_clique(g, members):
        return False
    inter = frozenset(g.vertices)
    for b in distinct_balls(g):
        if members <= b.members:
            inter &= b.members
    return inter == members


def first_subdivision(g: Graph, *, check_helly: bool = True) -> SubdivisionGraph:
    """First subdivision: round cliques, with an edge between two cliques
    when they intersect and their union is a clique; edge length 1/2.

    Vertices are the round cliques as sorted tuples of base vertices.
    """
    poset = round_cliques(g, check_helly=check_helly)
    verts = [tuple(sorted(c, key=g.index)) for c in poset.elements]
    sets = [frozenset(v) for v in verts]
    edges = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j] and is_clique(g, sets[i] | sets[j]):
                edges.append((verts[i], verts[j]))
    return SubdivisionGraph(graph=Graph(verts, edges), edge_length=Fraction(1, 2))


def combinatorial_dimension(g: Graph, *, check_helly: bool = True) -> int:
    """Length (in strict inclusions) of the longest chain of round cliques."""
    poset = round_cliques(g, check_helly=check_helly)
    els = sorted(poset.elements, key=len)
    height = {}
    best = 0
    for a in els:
        h = 0
        for b in els:
            if len(b) >= len(a):
                break
            if b < a:
                h = max(h, height[b] + 1)
        height[a] = h
        best = max(best, h)
    return best


def clique_to_extremal(g: Graph, a: Iterable[Vertex]) -> MetricFunction:
    """The half-integer extremal function f_A of a round clique A.

    For A = {x} this is d(x, .).  Otherwise members get 1/2 and a vertex x
    outside A with D = d(x, A) gets D when A lies inside B(x, D), else
    D + 1/2.  The result is checked to be extremal before returning.
    """
    members = frozenset(a)
    if not is_round(g, members):
        raise ValueError("vertex set %r is not a round clique" % (sorted(map(str, members)),))
    if len(members) == 1:
        (x,) = members
        values = {v: Fraction(g.distance(x, v)) for v in g.vertices}
    else:
        values = {}
        for x in g.vertices:
            if x in members:
                values[x] = Fraction(1, 2)
            else:
                dmin = min(g.distance(x, y) for y in members)
                covered = all(g.distance(x, y) <= dmin for y in members)
                values[x] = Fraction(dmin) if covered else dmin + Fraction(1, 2)
    f = metric_function(g, values)
    if not is_extremal(g, f):
        raise HellyLibError(
            "internal error: f_A is not extremal for %r" % (sorted(map(str, members)),)
        )
    return f


def extremal_to_clique(g: Graph, f: MetricFunction) -> RoundClique:
    """The round clique of a half-integer extremal function:
    intersection over x of B(x, ceil(f(x)))."""
    for v, x in zip(f.domain, f.values):
        if x.denominator not in (1, 2):
            raise ValueError(
                "value %s at vertex %r is not a half-integer" % (x, v)
            )
    if not is_extremal(g, f):
        raise ValueError("function is not extremal")
    inter: Optional[frozenset] = None
    for v, x in zip(f.domain, f.values):
        b = ball(g, v, ceil(x)).members
        inter = b if inter is None else inter & b
        if not inter:
            raise HellyLibError(
                "internal error: empty ball intersection for an extremal function"
            )
    assert inter is not None
    return frozenset(inter)
