"""Finite connected graphs, their metric, balls, and Helly recognition.

A graph is Helly when every family of pairwise intersecting combinatorial
balls has a common vertex.  Recognition uses the classical triple criterion
for the Helly property of the hypergraph of all distinct balls; an
exhaustive family search is provided as an independent oracle.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Optional

from .errors import HellyLibError, SearchBudgetError

Vertex = Hashable


def search_budget(default: int = 10**8) -> int:
    """Node budget for exhaustive searches; HELLY_BUDGET overrides."""
    raw = os.environ.get("HELLY_BUDGET")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("HELLY_BUDGET must be an integer, got %r" % raw) from None
    if value <= 0:
        raise ValueError("HELLY_BUDGET must be positive")
    return value


class Graph:
    """Connected simple graph over an ordered vertex list.

    The vertex input order is the canonical total order used for every
    sorted output.  Instances are immutable; the distance matrix is
    computed by breadth-first search on first use and cached.
    """

    __slots__ = ("_vertices", "_index", "_adj", "_edges", "_rows")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable) -> None:
        vs = tuple(vertices)
        if not vs:
            raise ValueError("graph needs at least one vertex")
        index: dict = {}
        for i, v in enumerate(vs):
            if v in index:
                raise ValueError("duplicate vertex %r" % (v,))
            index[v] = i
        adj = [set() for _ in vs]
        seen = set()
        for e in edges:
            u, w = e
            if u not in index or w not in index:
                raise ValueError("edge %r references an undeclared vertex" % (e,))
            i, j = index[u], index[w]
            if i == j:
                raise ValueError("self-loop at vertex %r" % (u,))
            key = (i, j) if i < j else (j, i)
            if key in seen:
                raise ValueError("duplicate edge %r" % (e,))
            seen.add(key)
            adj[i].add(j)
            adj[j].add(i)
        self._vertices = vs
        self._index = index
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = tuple(sorted(seen))
        self._rows: Optional[tuple] = None
        reached = self._bfs(0)
        if len(reached) != len(vs):
            missing = next(v for v in vs if index[v] not in reached)
            raise HellyLibError(
                "graph not connected: %r and %r are in different components"
                % (vs[0], missing)
            )

    def _bfs(self, start: int) -> dict:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in self._adj[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError("unknown vertex %r" % (v,)) from None

    def edges(self) -> tuple:
        """Edges as vertex pairs following the canonical vertex order."""
        vs = self._vertices
        return tuple((vs[i], vs[j]) for i, j in self._edges)

    def neighbors(self, v: Vertex) -> tuple:
        vs = self._vertices
        return tuple(vs[j] for j in self._adj[self.index(v)])

    def is_adjacent(self, u: Vertex, v: Vertex) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def _ensure_rows(self) -> tuple:
        if self._rows is None:
            n = len(self._vertices)
            rows = []
            for i in range(n):
                dist = self._bfs(i)
                rows.append(tuple(dist[j] for j in range(n)))
            self._rows = tuple(rows)
        return self._rows

    def distance(self, u: Vertex, v: Vertex) -> int:
        rows = self._ensure_rows()
        return rows[self.index(u)][self.index(v)]

    def eccentricity(self, v: Vertex) -> int:
        rows = self._ensure_rows()
        return max(rows[self.index(v)])

    def diameter(self) -> int:
        rows = self._ensure_rows()
        return max(max(row) for row in rows)

    def distance_matrix(self) -> "DistanceMatrix":
        return DistanceMatrix(self._vertices, self._ensure_rows())

    def __repr__(self) -> str:
        return "Graph(%d vertices, %d edges)" % (len(self._vertices), len(self._edges))


class DistanceMatrix:
    """Graph metric as a dense table over the canonical vertex order."""

    __slots__ = ("_vertices", "_index", "_rows")

    def __init__(self, vertices: tuple, rows: tuple) -> None:
        self._vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}
        self._rows = rows

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def d(self, u: Vertex, v: Vertex) -> int:
        return self._rows[self._index[u]][self._index[v]]

    def __getitem__(self, pair) -> int:
        u, v = pair
        return self.d(u, v)

    def row(self, v: Vertex) -> tuple:
        return self._rows[self._index[v]]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Graph metric of ``g``; cached on the graph after the first call."""
    return g.distance_matrix()


@dataclass(frozen=True)
class Ball:
    """Combinatorial ball: all vertices within ``radius`` of ``center``."""

    center: Vertex
    radius: int
    members: frozenset

    def __contains__(self, v: Vertex) -> bool:
        return v in self.members


def ball(g: Graph, v: Vertex, r: int) -> Ball:
    """The ball of radius ``r`` around ``v``; radius >= diameter gives all."""
    if r < 0:
        raise ValueError("radius must be nonnegative, got %r" % (r,))
    i = g.index(v)
    rows = g._ensure_rows()
    row = rows[i]
    members = frozenset(g.vertices[j] for j in range(len(row)) if row[j] <= r)
    return Ball(center=v, radius=r, members=members)


def distinct_balls(g: Graph) -> tuple:
    """All distinct balls of ``g``, radius capped at the diameter.

    Ordered by (center position, radius); only the first ball realizing a
    given member set is kept.
    """
    diam = g.diameter()
    out = []
    seen = set()
    for v in g.vertices:
        for r in range(diam + 1):
            b = ball(g, v, r)
            if b.members not in seen:
                seen.add(b.members)
                out.append(b)
    return tuple(out)


def is_clique(g: Graph, s: Iterable[Vertex]) -> bool:
    """True iff every pair of vertices in ``s`` is adjacent or equal."""
    idxs = sorted({g.index(v) for v in s})
    if not idxs:
        raise ValueError("empty vertex set is not a clique")
    for a in range(len(idxs)):
        for b in range(a + 1, len(idxs)):
            if idxs[b] not in g._adj[idxs[a]]:
                return False
    return True


class HellyResult(NamedTuple):
    helly: bool
    witness: Optional[tuple]


def _family_intersection(balls: Iterable[Ball]) -> frozenset:
    it = iter(balls)
    first = next(it)
    inter = set(first.members)
    for b in it:
        inter &= b.members
        if not inter:
            return frozenset()
    return frozenset(inter)


def _verify_witness(witness) -> bool:
    for a in range(len(witness)):
        for b in range(a + 1, len(witness)):
            if not (witness[a].members & witness[b].members):
                return False
    return not _family_intersection(witness)


def is_helly(g: Graph) -> HellyResult:
    """Decide the Helly property of ``g``.

    Applies the triple criterion to the hypergraph of all distinct balls:
    for every vertex triple, the balls containing at least two of the
    three vertices must share a common vertex.  On failure the violating
    family is shrunk to an inclusion-minimal witness and verified.
    """
    balls = distinct_balls(g)
    n = g.vertex_count
    vs = g.vertices
    member_masks = []
    for b in balls:
        mask = 0
        for v in b.members:
            mask |= 1 << g.index(v)
        member_masks.append(mask)
    # pair_mask[i][j]: bitset over ball indices containing both vertices
    pair_mask = [[0] * n for _ in range(n)]
    for bi, mask in enumerate(member_masks):
        idxs = [i for i in range(n) if mask >> i & 1]
        bit = 1 << bi
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                pair_mask[idxs[a]][idxs[b]] |= bit
    full = (1 << n) - 1
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                fam = pair_mask[a][b] | pair_mask[a][c] | pair_mask[b][c]
                inter = full
                f = fam
                while f:
                    low = f & -f
                    inter &= member_masks[low.bit_length() - 1]
                    if not inter:
                        break
                    f ^= low
                if not inter:
                    family = [balls[i] for i in range(len(balls)) if fam >> i & 1]
                    witness = _shrink_witness(family)
                    if not _verify_witness(witness):
                        raise HellyLibError(
                            "internal error: invalid Helly witness for triple %r"
                            % ((vs[a], vs[b], vs[c]),)
                        )
                    return HellyResult(False, tuple(witness))
    return HellyResult(True, None)


def _shrink_witness(family: list) -> list:
    """One removal pass yields an inclusion-minimal empty-intersection family."""
    current = list(family)
    for b in list(current):
        if len(current) <= 2:
            break
        rest = [x for x in current if x is not b]
        if not _family_intersection(rest):
            current = rest
    return current


def is_helly_bruteforce(
    g: Graph,
    max_family_size: int,
    *,
    max_vertices: int = 10,
    budget: Optional[int] = None,
) -> bool:
    """Exhaustive Helly check over ball families of bounded size.

    Explores every pairwise intersecting family of at most
    ``max_family_size`` distinct balls, searching for one with empty
    global intersection.  Families whose newest ball does not shrink the
    running intersection are skipped: any inclusion-minimal violating
    family shrinks it at every step, so none are missed.  Intended for
    graphs with at most ``max_vertices`` vertices.
    """
    if g.vertex_count > max_vertices:
        raise ValueError(
            "graph has %d vertices; raise max_vertices (currently %d) to force"
            % (g.vertex_count, max_vertices)
        )
    if max_family_size < 1:
        raise ValueError("max_family_size must be at least 1")
    balls = distinct_balls(g)
    n = g.vertex_count
    masks = []
    for b in balls:
        mask = 0
        for v in b.members:
            mask |= 1 << g.index(v)
        masks.append(mask)
    full = (1 << n) - 1
    limit = min(max_family_size, len(masks))
    nodes_left = budget if budget is not None else search_budget()

    def rec(cands, inter, depth):
        nonlocal nodes_left
        for pos, j in enumerate(cands):
            nodes_left -= 1
            if nodes_left < 0:
                raise SearchBudgetError(
                    "ball-family search exceeded its node budget"
                )
            m = masks[j]
            new_inter = inter & m
            if new_inter == inter:
                continue
            if not new_inter:
                return True
            if depth + 1 >= limit:
                continue
            rest = [k for k in cands[pos + 1 :] if masks[k] & m]
            uncoverable = new_inter
            for k in rest:
                uncoverable &= masks[k]
                if not uncoverable:
                    break
            if uncoverable:
                # some vertex survives every candidate extension
                continue
            if rec(rest, new_inter, depth + 1):
                return True
        return False

    return not rec(list(range(len(masks))), full, 0)


def graph_from_json(obj: dict) -> Graph:
    """Build a graph from ``{"vertices": [...], "edges": [[u, v], ...]}``."""
    if not isinstance(obj, dict):
        raise ValueError("graph JSON must be an object")
    try:
        vertices = obj["vertices"]
        edges = obj["edges"]
    except KeyError as exc:
        raise ValueError("graph JSON needs 'vertices' and 'edges'") from exc
    if not all(isinstance(v, str) for v in vertices):
        raise ValueError("graph JSON vertices must be strings")
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError("graph JSON edges must be pairs, got %r" % (e,))
    return Graph(vertices, [tuple(e) for e in edges])


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": [str(v) for v in g.vertices],
        "edges": [[str(u), str(v)] for u, v in g.edges()],
    }
