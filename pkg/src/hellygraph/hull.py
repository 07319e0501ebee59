"""Extremal functions, the sup metric, and grid vertices of the injective hull.

A function f on the vertices is admissible when it is 1-Lipschitz for the
graph metric and f(x) + f(y) >= d(x, y) for all pairs; it is extremal when
additionally f(x) = max_y d(x, y) - f(y) at every vertex.  The extremal
functions form the injective hull under the sup metric.  The level-N grid
consists of the extremal functions whose values all lie in (1/(2*N!))*N;
they are the vertices of the N-th subdivision, a Helly graph with edge
length 1/(2*N!).

All arithmetic is exact: values are ``fractions.Fraction``, never floats.
The grid enumerator works in integer numerators scaled by the grid
denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import NotHellyError, SearchBudgetError
from .graph import Graph, Vertex, search_budget


@dataclass(frozen=True)
class MetricFunction:
    """Map from vertices to nonnegative rationals, in vertex order."""

    domain: tuple
    values: tuple

    def value(self, v: Vertex) -> Fraction:
        try:
            return self.values[self.domain.index(v)]
        except ValueError:
            raise ValueError("unknown vertex %r" % (v,)) from None

    __getitem__ = value

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.values))

    def __repr__(self) -> str:
        inner = ", ".join("%r: %s" % (v, x) for v, x in zip(self.domain, self.values))
        return "MetricFunction({%s})" % inner


def metric_function(g: Graph, values: Mapping) -> MetricFunction:
    """Build a MetricFunction over the vertices of ``g``.

    Every vertex needs a value; values are coerced to ``Fraction``.
    """
    out = []
    for v in g.vertices:
        if v not in values:
            raise ValueError("missing value for vertex %r" % (v,))
        x = Fraction(values[v])
        if x < 0:
            raise ValueError("negative value %s at vertex %r" % (x, v))
        out.append(x)
    if len(values) != g.vertex_count:
        extra = next(k for k in values if k not in g.vertices)
        raise ValueError("value for unknown vertex %r" % (extra,))
    return MetricFunction(domain=g.vertices, values=tuple(out))


def _check_domain(g: Graph, f: MetricFunction) -> None:
    if f.domain != g.vertices:
        raise ValueError("function domain does not match the graph's vertices")


def is_admissible(g: Graph, f: MetricFunction) -> bool:
    """1-Lipschitz and pair sums dominate distances (x = y gives f >= 0)."""
    _check_domain(g, f)
    rows = g._ensure_rows()
    vals = f.values
    n = len(vals)
    for i in range(n):
        for j in range(i, n):
            d = rows[i][j]
            if vals[i] + vals[j] < d or abs(vals[i] - vals[j]) > d:
                return False
    return True


def is_extremal(g: Graph, f: MetricFunction) -> bool:
    """Whether f(x) = max_y d(x, y) - f(y) at every vertex.

    Raises on inadmissible input rather than answering there.
    """
    if not is_admissible(g, f):
        raise ValueError("function is not admissible")
    rows = g._ensure_rows()
    vals = f.values
    n = len(vals)
    for i in range(n):
        if vals[i] != max(rows[i][j] - vals[j] for j in range(n)):
            return False
    return True


def sup_distance(f: MetricFunction, h: MetricFunction) -> Fraction:
    """Sup metric: max over vertices of |f - h|."""
    if f.domain != h.domain:
        raise ValueError("functions have different vertex domains")
    return max(abs(a - b) for a, b in zip(f.values, h.values))


def grid_step(level: int) -> Fraction:
    """Edge length 1/(2*N!) of the level-N subdivision."""
    if level < 1:
        raise ValueError("subdivision level must be at least 1")
    return Fraction(1, 2 * math.factorial(level))


def _bfs_positions(g: Graph) -> list:
    """Vertex indices in breadth-first order from the first vertex."""
    from collections import deque

    order = []
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        order.append(i)
        for j in g._adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return order


def _grid_functions(
    g: Graph,
    denom: int,
    orbits: Optional[Sequence[Sequence[int]]] = None,
    budget: Optional[int] = None,
) -> list:
    """All extremal functions with values in (1/denom)*N, constant on orbits.

    Depth-first search over vertex orbits in breadth-first order, assigning
    scaled integer values, pruning on the Lipschitz and pair-sum windows as
    soon as both endpoints are assigned; the final orbit's value is forced
    by the extremality equation and every leaf is verified in full.
    """
    n = g.vertex_count
    rows = g._ensure_rows()
    D = [[rows[i][j] * denom for j in range(n)] for i in range(n)]
    ecc = [max(rows[i]) * denom for i in range(n)]
    if orbits is None:
        orbit_list = [(i,) for i in range(n)]
    else:
        orbit_list = [tuple(sorted(o)) for o in orbits]
        covered = sorted(i for o in orbit_list for i in o)
        if covered != list(range(n)):
            raise ValueError("orbits must partition the vertex set")
    pos = {i: p for p, i in enumerate(_bfs_positions(g))}
    orbit_list.sort(key=lambda o: min(pos[i] for i in o))
    m = len(orbit_list)
    nodes_left = budget if budget is not None else search_budget()
    vals = [0] * n
    results = []

    def window(oi: int):
        orbit = orbit_list[oi]
        lo = 0
        hi = min(ecc[x] for x in orbit)
        for x in orbit:
            for x2 in orbit:
                if x2 > x:
                    lo = max(lo, (D[x][x2] + 1) // 2)
        for pj in range(oi):
            for y in orbit_list[pj]:
                ky = vals[y]
                for x in orbit:
                    d = D[x][y]
                    lo = max(lo, d - ky, ky - d)
                    hi = min(hi, ky + d)
        return lo, hi

    def forced_value(oi: int):
        """Unique candidate for the last orbit from f(x) = max_y d(x,y) - f(y)."""
        orbit = orbit_list[oi]
        outside = [y for pj in range(oi) for y in orbit_list[pj]]
        cand = None
        for x in orbit:
            a = max((D[x][y] - vals[y] for y in outside), default=None)
            b = max(D[x][x2] for x2 in orbit)
            if a is not None and 2 * a >= b:
                c = a
            elif b % 2 == 0:
                c = b // 2
            else:
                return None
            if cand is None:
                cand = c
            elif cand != c:
                return None
        return cand

    def extremal_at_leaf() -> bool:
        for i in range(n):
            if vals[i] != max(D[i][j] - vals[j] for j in range(n)):
                return False
        return True

    def rec(oi: int) -> None:
        nonlocal nodes_left
        lo, hi = window(oi)
        if lo > hi:
            return
        if oi == m - 1:
            k = forced_value(oi)
            nodes_left -= 1
            if nodes_left < 0:
                raise SearchBudgetError(
                    "grid search exceeded its node budget; "
                    "try a smaller level N or a smaller graph"
                )
            if k is None or k < lo or k > hi:
                return
            for x in orbit_list[oi]:
                vals[x] = k
            if extremal_at_leaf():
                results.append(
                    MetricFunction(
                        domain=g.vertices,
                        values=tuple(Fraction(vals[i], denom) for i in range(n)),
                    )
                )
            return
        for k in range(lo, hi + 1):
            nodes_left -= 1
            if nodes_left < 0:
                raise SearchBudgetError(
                    "grid search exceeded its node budget; "
                    "try a smaller level N or a smaller graph"
                )
            for x in orbit_list[oi]:
                vals[x] = k
            rec(oi + 1)

    rec(0)
    results.sort(key=lambda f: f.values)
    return results


def _require_helly(g: Graph) -> None:
    from .graph import is_helly

    res = is_helly(g)
    if not res.helly:
        raise NotHellyError(res.witness)


def hull_grid_vertices(
    g: Graph,
    level: int,
    *,
    check_helly: bool = True,
    budget: Optional[int] = None,
) -> list:
    """All extremal functions with values in (1/(2*N!))*N, canonically sorted."""
    step = grid_step(level)
    if check_helly:
        _require_helly(g)
    return _grid_functions(g, step.denominator, budget=budget)


@dataclass(frozen=True)
class SubdivisionGraph:
    """A subdivision of a Helly graph: unit graph plus its true edge length."""

    graph: Graph
    edge_length: Fraction

    @property
    def vertices(self) -> tuple:
        return self.graph.vertices

    def edges(self) -> tuple:
        return self.graph.edges()


def grid_graph(
    g: Graph,
    level: int,
    *,
    check_helly: bool = True,
    budget: Optional[int] = None,
) -> SubdivisionGraph:
    """Level-N subdivision: grid vertices, edges at sup-distance 1/(2*N!)."""
    step = grid_step(level)
    functions = hull_grid_vertices(g, level, check_helly=check_helly, budget=budget)
    edges = []
    for i in range(len(functions)):
        for j in range(i + 1, len(functions)):
            if sup_distance(functions[i], functions[j]) == step:
                edges.append((functions[i], functions[j]))
    return SubdivisionGraph(graph=Graph(functions, edges), edge_length=step)


@dataclass(frozen=True)
class OrthoschemePoint:
    """Convex combination of level-N grid vertices spanning one simplex."""

    level: int
    support: tuple

    def domain(self) -> tuple:
        return self.support[0][0].domain


def orthoscheme_point(level: int, support: Iterable) -> OrthoschemePoint:
    """Validate and build a point sum(t_i * x_i) of the level-N complex.

    Weights must be nonnegative rationals summing to 1; the support
    functions must be pairwise distinct, share a domain, and lie pairwise
    within sup-distance 1/(2*N!) of each other.
    """
    step = grid_step(level)
    pairs = tuple((f, Fraction(t)) for f, t in support)
    if not pairs:
        raise ValueError("a point needs at least one support vertex")
    domain = pairs[0][0].domain
    total = Fraction(0)
    for f, t in pairs:
        if f.domain != domain:
            raise ValueError("support functions have different domains")
        if t < 0:
            raise ValueError("negative weight %s" % t)
        total += t
    if total != 1:
        raise ValueError("weights sum to %s, expected 1" % total)
    funcs = [f for f, _ in pairs]
    if len(set(funcs)) != len(funcs):
        raise ValueError("support vertices must be pairwise distinct")
    for i in range(len(funcs)):
        for j in range(i + 1, len(funcs)):
            if sup_distance(funcs[i], funcs[j]) > step:
                raise ValueError(
                    "support vertices at sup-distance > %s do not span a simplex"
                    % step
                )
    return OrthoschemePoint(level=level, support=pairs)


def point_eval(p: OrthoschemePoint, x: Vertex) -> Fraction:
    """Distance from the point to the graph vertex x: sum t_i d(x_i, x)."""
    return sum((t * f.value(x) for f, t in p.support), Fraction(0))


def point_distance(p: OrthoschemePoint, q: OrthoschemePoint, g: Graph) -> Fraction:
    """Exact distance between two points of the level-N complex.

    max over vertices x of sum_{i,i'} t_i t'_{i'} |d(x_i, x) - d(x'_{i'}, x)|.
    """
    if p.level != q.level:
        raise ValueError("level mismatch: %d vs %d" % (p.level, q.level))
    if p.domain() != g.vertices or q.domain() != g.vertices:
        raise ValueError("points are not over the vertices of this graph")
    best = Fraction(0)
    for idx in range(g.vertex_count):
        total = Fraction(0)
        for f, t in p.support:
            fv = f.values[idx]
            for h, s in q.support:
                total += t * s * abs(fv - h.values[idx])
        if total > best:
            best = total
    return best
