"""Automorphisms of finite Helly graphs and their fixed structures.

Every automorphism group of a finite graph has bounded orbits, hence
stabilizes a round clique and fixes grid vertices of the injective hull.
This module finds those witnesses, measures distances between the fixed
sets of two groups on a rational grid, and solves the {-1,0,1} linear
systems whose solutions have denominators dividing n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import HellyLibError, NotHellyError
from .graph import Graph, Vertex, is_helly
from .hull import MetricFunction, _grid_functions, sup_distance
from .cliques import CliquePoset, RoundClique, round_cliques


@dataclass(frozen=True)
class Automorphism:
    """Adjacency-preserving bijection on the vertices of a graph."""

    domain: tuple
    images: tuple

    def __call__(self, v: Vertex) -> Vertex:
        try:
            return self.images[self.domain.index(v)]
        except ValueError:
            raise ValueError("unknown vertex %r" % (v,)) from None

    def apply_set(self, s: Iterable[Vertex]) -> frozenset:
        return frozenset(self(v) for v in s)

    def inverse(self) -> "Automorphism":
        back = {img: src for src, img in zip(self.domain, self.images)}
        return Automorphism(domain=self.domain, images=tuple(back[v] for v in self.domain))

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.images))


def check_automorphism(g: Graph, p: Mapping) -> Automorphism:
    """Validate a permutation of the vertices as a graph automorphism.

    Rejects non-bijections, and adjacency violations with a witness edge.
    A bijection of a finite simple graph mapping edges to edges also maps
    non-edges to non-edges, so one direction is checked.
    """
    if isinstance(p, Automorphism):
        p = p.as_dict()
    vs = g.vertices
    if set(p.keys()) != set(vs):
        raise ValueError("permutation keys do not match the vertex set")
    if set(p.values()) != set(vs):
        raise ValueError("permutation is not a bijection onto the vertex set")
    for u, v in g.edges():
        if not g.is_adjacent(p[u], p[v]):
            raise ValueError(
                "not an automorphism: edge (%r, %r) maps to non-edge (%r, %r)"
                % (u, v, p[u], p[v])
            )
    return Automorphism(domain=vs, images=tuple(p[v] for v in vs))


def identity_automorphism(g: Graph) -> Automorphism:
    return Automorphism(domain=g.vertices, images=g.vertices)


def _check_gens(g: Graph, gens: Sequence) -> list:
    if not gens:
        raise ValueError("a subgroup needs at least one generator")
    out = []
    for a in gens:
        a = a if isinstance(a, Automorphism) else check_automorphism(g, a)
        if a.domain != g.vertices:
            raise ValueError("generator is not over this graph's vertices")
        out.append(a)
    return out


def act_on_function(a: Automorphism, f: MetricFunction) -> MetricFunction:
    """Induced action on the hull: (a . f)(x) = f(a^-1 x)."""
    if a.domain != f.domain:
        raise ValueError("automorphism and function have different domains")
    inv = {img: src for src, img in zip(a.domain, a.images)}
    return MetricFunction(
        domain=f.domain,
        values=tuple(f.values[f.domain.index(inv[v])] for v in f.domain),
    )


def induced_on_round_cliques(a: Automorphism, poset: CliquePoset) -> dict:
    """The inclusion-preserving permutation sigma -> a(sigma) of the poset."""
    elements = set(poset.elements)
    out = {}
    for c in poset.elements:
        image = a.apply_set(c)
        if image not in elements:
            raise HellyLibError(
                "internal error: image %r is not a round clique" % (sorted(map(str, image)),)
            )
        out[c] = image
    return out


def _canonical_clique_order(g: Graph, cliques: Iterable) -> list:
    return sorted(cliques, key=lambda c: tuple(sorted(g.index(v) for v in c)))


def elliptic_witness(
    g: Graph, gens: Sequence, *, check_helly: bool = True
) -> RoundClique:
    """A round clique stabilized setwise by every generator.

    On a finite Helly graph a witness always exists (orbits are bounded);
    the least one in canonical serialization order is returned, and its
    absence is an internal-consistency error.
    """
    gens = _check_gens(g, gens)
    poset = round_cliques(g, check_helly=check_helly)
    for c in _canonical_clique_order(g, poset.elements):
        if all(a.apply_set(c) == c for a in gens):
            return c
    raise HellyLibError(
        "internal error: no stabilized round clique on a finite Helly graph"
    )


def vertex_orbits(g: Graph, gens: Sequence) -> tuple:
    """Orbits of the generated group on vertex indices, as sorted tuples."""
    gens = _check_gens(g, gens)
    parent = list(range(g.vertex_count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in gens:
        for src, img in zip(a.domain, a.images):
            ri, rj = find(g.index(src)), find(g.index(img))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict = {}
    for i in range(g.vertex_count):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(v) for _, v in sorted(groups.items()))


def fixed_grid_vertices(
    g: Graph,
    gens: Sequence,
    level: int,
    *,
    check_helly: bool = True,
    budget: Optional[int] = None,
) -> list:
    """Level-N grid vertices fixed by every generator.

    A grid function is fixed by the group exactly when it is constant on
    the vertex orbits, so the search assigns one value per orbit.
    """
    gens = _check_gens(g, gens)
    if level < 1:
        raise ValueError("subdivision level must be at least 1")
    if check_helly:
        res = is_helly(g)
        if not res.helly:
            raise NotHellyError(res.witness)
    denom = 2 * math.factorial(level)
    return _grid_functions(g, denom, orbits=vertex_orbits(g, gens), budget=budget)


@dataclass(frozen=True)
class FixedSetDistance:
    dist: Fraction
    witness_g: MetricFunction
    witness_h: MetricFunction
    resolution: int


def fixed_set_distance(
    g: Graph,
    gens_g: Sequence,
    gens_h: Sequence,
    resolution: int,
    *,
    check_helly: bool = True,
    budget: Optional[int] = None,
) -> FixedSetDistance:
    """Minimum sup-distance between the two fixed sets on the 1/resolution grid.

    ``resolution`` must be a positive multiple of 2 so that the grid
    contains the half-integer witnesses of stabilized round cliques.
    Returns the minimizing pair, ties broken by canonical function order.
    """
    if resolution < 2 or resolution % 2:
        raise ValueError("resolution must be a positive multiple of 2")
    gens_g = _check_gens(g, gens_g)
    gens_h = _check_gens(g, gens_h)
    if check_helly:
        res = is_helly(g)
        if not res.helly:
            raise NotHellyError(res.witness)
    fg = _grid_functions(g, resolution, orbits=vertex_orbits(g, gens_g), budget=budget)
    fh = _grid_functions(g, resolution, orbits=vertex_orbits(g, gens_h), budget=budget)
    if not fg or not fh:
        raise HellyLibError("internal error: a fixed grid set is empty")
    best = None
    for f1 in fg:
        for f2 in fh:
            d = sup_distance(f1, f2)
            if best is None or d < best[0]:
                best = (d, f1, f2)
    return FixedSetDistance(
        dist=best[0], witness_g=best[1], witness_h=best[2], resolution=resolution
    )


def solve_pm1_system(A: Sequence[Sequence], y: Sequence) -> tuple:
    """Solve A x = y exactly for an invertible matrix with entries in {-1,0,1}.

    Gaussian elimination over the rationals; every denominator of the
    solution is checked to divide n!.
    """
    n = len(A)
    if n == 0:
        raise ValueError("empty system")
    rows = []
    for row in A:
        row = [Fraction(x) for x in row]
        if len(row) != n:
            raise ValueError("matrix is not square")
        for x in row:
            if x not in (-1, 0, 1):
                raise ValueError("matrix entry %s is not in {-1, 0, 1}" % x)
        rows.append(row)
    rhs = [Fraction(v) for v in y]
    if len(rhs) != n:
        raise ValueError("right-hand side has wrong length")
    for v in rhs:
        if v.denominator != 1:
            raise ValueError("right-hand side entry %s is not an integer" % v)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        p = rows[col][col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col] / p
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
                rhs[r] -= factor * rhs[col]
    x = tuple(rhs[i] / rows[i][i] for i in range(n))
    bound = math.factorial(n)
    for v in x:
        if bound % v.denominator:
            raise HellyLibError(
                "denominator %d of %s does not divide %d!" % (v.denominator, v, n)
            )
    return x
