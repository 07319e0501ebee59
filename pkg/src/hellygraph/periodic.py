"""Infinite carriers of hyperbolic automorphisms, with exact translation lengths.

Two families are supported: the king lattice Z^n under the l-infinity
metric with signed-permutation-plus-shift automorphisms, and Z-periodic
graphs presented by a finite quotient with integer voltages, acted on by
the deck transformation.  Translation lengths are exact rationals; the
deck length is pinned through the denominator bound 2N for graphs of
combinatorial dimension at most N, and the pinning fails loudly when the
bound is wrong.  A minimum mean cycle engine (Karp) backs the loop
quantities appearing in the hyperbolicity analysis.
"""

from __future__ import annotations

import itertools
import math
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from .errors import HellyLibError
from .graph import Graph

# --- minimum mean cycle ------------------------------------------------------


@dataclass(frozen=True)
class WeightedDigraph:
    """Directed graph with rational arc weights; parallel arcs collapse to
    their minimum weight, self-loops allowed."""

    nodes: tuple
    arcs: tuple

    @staticmethod
    def build(nodes: Iterable, arcs: Iterable) -> "WeightedDigraph":
        ns = tuple(nodes)
        index = {v: i for i, v in enumerate(ns)}
        if len(index) != len(ns):
            raise ValueError("duplicate nodes")
        best: dict = {}
        for u, v, w in arcs:
            if u not in index or v not in index:
                raise ValueError("arc (%r, %r) references an unknown node" % (u, v))
            w = Fraction(w)
            key = (u, v)
            if key not in best or w < best[key]:
                best[key] = w
        return WeightedDigraph(
            nodes=ns,
            arcs=tuple((u, v, best[(u, v)]) for (u, v) in sorted(best, key=lambda k: (index[k[0]], index[k[1]]))),
        )


@dataclass(frozen=True)
class MinMeanCycle:
    mean: Fraction
    cycle: tuple


def _strongly_connected_components(n: int, out_arcs) -> list:
    """Tarjan, iterative; components listed with nodes in index order."""
    index_of = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index_of[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for next_pi in range(pi, len(out_arcs[v])):
                w = out_arcs[v][next_pi][0]
                if index_of[w] is None:
                    work[-1] = (v, next_pi + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def min_mean_cycle(d: WeightedDigraph) -> MinMeanCycle:
    """Exact minimum over directed cycles of total weight / length.

    Karp's dynamic program per strongly connected component, followed by a
    zero-mean cycle extraction in the reweighted tight subgraph.  The
    returned cycle is simple, so it has at most |nodes| arcs.
    """
    n = len(d.nodes)
    index = {v: i for i, v in enumerate(d.nodes)}
    out_arcs = [[] for _ in range(n)]
    for u, v, w in d.arcs:
        out_arcs[index[u]].append((index[v], w))
    best: Optional[Tuple[Fraction, list]] = None
    for comp in _strongly_connected_components(n, out_arcs):
        comp_set = set(comp)
        arcs = [
            (u, v, w)
            for u in comp
            for v, w in out_arcs[u]
            if v in comp_set
        ]
        if not arcs:
            continue
        m = len(comp)
        pos = {v: i for i, v in enumerate(comp)}
        INF = None
        F = [[INF] * m for _ in range(m + 1)]
        F[0][0] = Fraction(0)
        for k in range(1, m + 1):
            row = F[k]
            prev = F[k - 1]
            for u, v, w in arcs:
                pu, pv = pos[u], pos[v]
                if prev[pu] is not None:
                    cand = prev[pu] + w
                    if row[pv] is None or cand < row[pv]:
                        row[pv] = cand
        mu = None
        for v in range(m):
            if F[m][v] is None:
                continue
            worst = None
            for k in range(m):
                if F[k][v] is None:
                    continue
                ratio = (F[m][v] - F[k][v]) / (m - k)
                if worst is None or ratio > worst:
                    worst = ratio
            if worst is not None and (mu is None or worst < mu):
                mu = worst
        if mu is None:
            continue
        if best is None or mu < best[0]:
            best = (mu, comp, arcs, pos)
    if best is None:
        raise ValueError("digraph has no directed cycle")
    mu, comp, arcs, pos = best
    # Bellman-Ford potentials for w - mu; arcs with equality carry the cycle.
    m = len(comp)
    pot = [None] * m
    pot[0] = Fraction(0)
    for _ in range(m - 1):
        changed = False
        for u, v, w in arcs:
            pu, pv = pos[u], pos[v]
            if pot[pu] is not None:
                cand = pot[pu] + w - mu
                if pot[pv] is None or cand < pot[pv]:
                    pot[pv] = cand
                    changed = True
        if not changed:
            break
    tight = [[] for _ in range(m)]
    for u, v, w in arcs:
        pu, pv = pos[u], pos[v]
        if pot[pu] is not None and pot[pv] is not None and pot[pu] + w - mu == pot[pv]:
            tight[pu].append(pv)
    color = [0] * m
    cycle_nodes: list = []

    def dfs(v, path):
        color[v] = 1
        path.append(v)
        for w in tight[v]:
            if color[w] == 1:
                cycle_nodes.extend(path[path.index(w):])
                return True
            if color[w] == 0 and dfs(w, path):
                return True
        path.pop()
        color[v] = 2
        return False

    for v in range(m):
        if color[v] == 0 and dfs(v, []):
            break
    if not cycle_nodes:
        raise HellyLibError("internal error: no tight cycle at the optimum")
    k = cycle_nodes.index(min(cycle_nodes))
    rotated = cycle_nodes[k:] + cycle_nodes[:k]
    cycle = tuple(d.nodes[comp[i]] for i in rotated)
    weight_of = {(u, v): w for u, v, w in arcs}
    total = sum(
        weight_of[(comp[rotated[i]], comp[rotated[(i + 1) % len(rotated)]])]
        for i in range(len(rotated))
    )
    if Fraction(total, len(rotated)) != mu:
        raise HellyLibError("internal error: extracted cycle misses the optimum")
    return MinMeanCycle(mean=mu, cycle=cycle)


# --- king lattice ------------------------------------------------------------


@dataclass(frozen=True)
class LatticeGraph:
    """Z^n with the l-infinity (king) metric; adjacency at distance 1."""

    dim: int

    def distance(self, x: Sequence, y: Sequence) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("points must have %d coordinates" % self.dim)
        return max(abs(Fraction(a) - Fraction(b)) for a, b in zip(x, y))

    def is_adjacent(self, x: Sequence, y: Sequence) -> bool:
        return tuple(x) != tuple(y) and self.distance(x, y) == 1


@dataclass(frozen=True)
class AffineAutomorphism:
    """x -> (s_i * x[perm[i]] + shift[i])_i, a signed permutation plus shift.

    Always an automorphism of the king lattice: signed coordinate
    permutations preserve the l-infinity metric.
    """

    perm: tuple
    signs: tuple
    shift: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        if len(self.signs) != n or any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +-1, one per coordinate")
        if len(self.shift) != n or any(
            not isinstance(v, int) for v in self.shift
        ):
            raise ValueError("shift must be an integer vector")

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def from_one_indexed(cls, perm, signs=None, shift=None) -> "AffineAutomorphism":
        n = len(perm)
        return cls(
            perm=tuple(p - 1 for p in perm),
            signs=tuple(signs) if signs is not None else (1,) * n,
            shift=tuple(shift) if shift is not None else (0,) * n,
        )

    def apply(self, x: Sequence) -> tuple:
        if len(x) != self.dim:
            raise ValueError("point has wrong dimension")
        return tuple(
            self.signs[i] * x[self.perm[i]] + self.shift[i] for i in range(self.dim)
        )

    def apply_power(self, k: int, x: Sequence) -> tuple:
        if k < 0:
            raise ValueError("nonnegative powers only")
        out = tuple(x)
        for _ in range(k):
            out = self.apply(out)
        return out

    def linear_order(self) -> int:
        """Order of the signed permutation (ignoring the shift)."""
        order = 1
        for length, sign in self._cycles():
            period = length if sign == 1 else 2 * length
            order = order * period // gcd(order, period)
        return order

    def _cycles(self):
        """(length, sign product) per cycle of the reading permutation."""
        n = self.dim
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            sign = 1
            i = start
            while not seen[i]:
                seen[i] = True
                sign *= self.signs[i]
                i = self.perm[i]
                length += 1
            yield length, sign


def affine_translation_length(a: AffineAutomorphism) -> Fraction:
    """Exact translation length on the king lattice.

    Per permutation cycle: the net shift accumulated around one period,
    zero when the cycle's sign product is -1 (the displacement there is
    bounded); the length is the largest |drift| / cycle-length.  Verified
    against orbit-growth estimates in the test suite, since this closed
    form is a derivation rather than a quoted formula.
    """
    n = a.dim
    seen = [False] * n
    best = Fraction(0)
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = a.perm[i]
        sign_product = 1
        drift = 0
        s = 1
        for i in cycle:
            drift += s * a.shift[i]
            s *= a.signs[i]
        sign_product = s
        if sign_product == 1:
            best = max(best, Fraction(abs(drift), len(cycle)))
    return best


def affine_length_estimate(a: AffineAutomorphism, n_max: int) -> list:
    """The sequence d(0, a^n 0)/n for n = 1..n_max, by orbit iteration."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    out = []
    x = (0,) * a.dim
    for n in range(1, n_max + 1):
        x = a.apply(x)
        out.append(Fraction(max(abs(c) for c in x), n))
    return out


# --- Z-periodic graphs -------------------------------------------------------


class PeriodicGraph:
    """Z-cover of a finite quotient presented by integer edge voltages.

    Cover vertices are (quotient vertex, layer); a voltage edge (u, v, z)
    lifts to edges (u, k) -- (v, k + z) for every k.  The deck
    transformation shifts layers by one.  Loops of voltage 0 would lift to
    self-loops and are rejected; the cover must be connected, which holds
    exactly when the quotient is connected and the cycle voltages generate
    Z.  Whether the cover is Helly is an input contract: it is not
    decidable from finite data, and `helly_window_evidence` checks windows.
    """

    def __init__(self, vertices: Iterable, voltages: Iterable) -> None:
        vs = tuple(vertices)
        index = {v: i for i, v in enumerate(vs)}
        if len(index) != len(vs):
            raise ValueError("duplicate quotient vertices")
        canon = []
        seen = set()
        for u, v, z in voltages:
            if u not in index or v not in index:
                raise ValueError("voltage edge (%r, %r) references an unknown vertex" % (u, v))
            if not isinstance(z, int):
                raise ValueError("voltage must be an integer, got %r" % (z,))
            if u == v:
                if z == 0:
                    raise ValueError("loop of voltage 0 lifts to a self-loop")
                key = (u, v, abs(z))
            elif index[u] <= index[v]:
                key = (u, v, z)
            else:
                key = (v, u, -z)
            if key in seen:
                raise ValueError("duplicate voltage edge (%r, %r, %r)" % (u, v, z))
            seen.add(key)
            canon.append(key)
        projection = sorted({(u, v) for u, v, _ in canon if u != v})
        self.quotient = Graph(vs, projection)
        self.voltages = tuple(sorted(canon, key=lambda t: (index[t[0]], index[t[1]], t[2])))
        self._neighbors = {v: [] for v in vs}
        for u, v, z in self.voltages:
            self._neighbors[u].append((v, z))
            self._neighbors[v].append((u, -z))
        # connectivity of the cover: cycle voltages must generate Z
        theta = {vs[0]: 0}
        queue = deque([vs[0]])
        g = 0
        while queue:
            u = queue.popleft()
            for v, z in self._neighbors[u]:
                if v not in theta:
                    theta[v] = theta[u] + z
                    queue.append(v)
                else:
                    g = gcd(g, abs(theta[u] + z - theta[v]))
        if g != 1:
            raise HellyLibError(
                "cover is not connected: cycle voltages generate %dZ" % g
            )
        self.max_voltage = max(abs(z) for _, _, z in self.voltages)

    def cover_neighbors(self, node):
        u, layer = node
        for v, z in self._neighbors[u]:
            yield (v, layer + z)

    def __repr__(self) -> str:
        return "PeriodicGraph(%d quotient vertices, %d voltage edges)" % (
            self.quotient.vertex_count,
            len(self.voltages),
        )


def periodic_from_json(obj: dict) -> PeriodicGraph:
    """{"quotient": <graph JSON>, "voltages": [["a", "b", 1], ...]}"""
    try:
        quotient = obj["quotient"]
        voltages = obj["voltages"]
    except (TypeError, KeyError):
        raise ValueError("periodic graph JSON needs 'quotient' and 'voltages'") from None
    vs = quotient.get("vertices")
    if vs is None:
        raise ValueError("quotient JSON needs 'vertices'")
    triples = []
    for item in voltages:
        if len(item) != 3:
            raise ValueError("voltage entries are [u, v, z] triples")
        u, v, z = item
        triples.append((u, v, int(z)))
    p = PeriodicGraph(vs, triples)
    declared = {tuple(sorted(e)) for e in quotient.get("edges", [])}
    actual = {tuple(sorted(e)) for e in p.quotient.edges()}
    if declared != actual:
        raise ValueError("quotient edges do not match the projected voltage edges")
    return p


def periodic_to_json(p: PeriodicGraph) -> dict:
    from .graph import graph_to_json

    return {
        "quotient": graph_to_json(p.quotient),
        "voltages": [[str(u), str(v), z] for u, v, z in p.voltages],
    }


def cover_window(p: PeriodicGraph, k: int) -> Graph:
    """Finite lift on quotient x [-k, k]; edges whose voltage stays in range.

    A too-small window can be disconnected; in that case a warning is
    issued and the component of (first vertex, 0) is returned.
    """
    if k < 1:
        raise ValueError("window radius must be at least 1")
    vs = [(q, j) for j in range(-k, k + 1) for q in p.quotient.vertices]
    vset = set(vs)
    edges = set()
    for u, v, z in p.voltages:
        for j in range(-k, k + 1):
            a, b = (u, j), (v, j + z)
            if b in vset:
                edges.add((a, b) if vs.index(a) < vs.index(b) else (b, a))
    # component of (v0, 0)
    root = (p.quotient.vertices[0], 0)
    adj = {v: [] for v in vs}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(vs):
        warnings.warn(
            "cover window of radius %d is disconnected; returning the component "
            "of %r (window too small)" % (k, root),
            stacklevel=2,
        )
        vs = [v for v in vs if v in seen]
        edges = {(a, b) for a, b in edges if a in seen and b in seen}
    return Graph(vs, sorted(edges, key=lambda e: (vs.index(e[0]), vs.index(e[1]))))


def helly_window_evidence(p: PeriodicGraph, k: int) -> bool:
    """Whether the radius-k window passes the Helly check (bounded evidence)."""
    from .graph import is_helly

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return is_helly(cover_window(p, k)).helly


def _window_distance(p: PeriodicGraph, a, b, *, max_doublings: int = 12) -> int:
    """Cover distance via BFS in layer windows grown until it stabilizes twice."""
    (u, i), (v, j) = a, b
    margin = abs(i - j) * (1 + p.max_voltage) + p.quotient.diameter() + 2
    lo, hi = min(i, j), max(i, j)
    last = None
    stable = 0
    for _ in range(max_doublings):
        dist = _bfs_in_window(p, a, b, lo - margin, hi + margin)
        if dist is not None and dist == last:
            stable += 1
            if stable >= 2:
                return dist
        else:
            stable = 0
        last = dist
        margin *= 2
    raise HellyLibError(
        "cover distance from %r to %r did not stabilize" % (a, b)
    )


def _bfs_in_window(p: PeriodicGraph, a, b, lo: int, hi: int) -> Optional[int]:
    dist = {a: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return dist[x]
        for y in p.cover_neighbors(x):
            if lo <= y[1] <= hi and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def deck_translation_length(p: PeriodicGraph, dim_bound: int) -> Fraction:
    """Exact translation length of the deck transformation t -> t + 1.

    Computes d((v,0),(v,n))/n by window BFS for growing n and pins the
    unique rational with denominator at most 2*dim_bound inside the
    bracket [d_n/n - err/n, d_n/n], where err bounds d_n - n*tau through
    the cycle structure of the quotient.  A wrong dim_bound empties the
    bracket and raises instead of guessing.
    """
    if dim_bound < 1:
        raise ValueError("dim_bound must be at least 1")
    q_max = 2 * dim_bound
    v0 = p.quotient.vertices[0]
    d1 = _window_distance(p, (v0, 0), (v0, 1))
    # d_n <= n*tau + err: 2*diam to reach an optimal-ratio cycle and back,
    # plus < z* unit shifts with z* at most |V| * max voltage.
    err = 2 * p.quotient.diameter() + p.quotient.vertex_count * p.max_voltage * d1
    upper_best = None
    lower_best = None
    n = 1
    n_limit = max(64, 16 * err * q_max * q_max)
    # distinct rationals with denominators <= q_max are >= 1/q_max^2 apart,
    # so a bracket narrower than that holds at most one candidate
    width_gate = Fraction(1, q_max * q_max)
    interval = None
    while n <= n_limit:
        dn = _window_distance(p, (v0, 0), (v0, n))
        upper = Fraction(dn, n)
        lower = Fraction(dn - err, n)
        if upper_best is None or upper < upper_best:
            upper_best = upper
        if lower_best is None or lower > lower_best:
            lower_best = lower
        interval = (lower_best, upper_best)
        candidates = set()
        for q in range(1, q_max + 1):
            num_lo = -(-lower_best.numerator * q // lower_best.denominator)  # ceil
            num_hi = upper_best.numerator * q // upper_best.denominator  # floor
            for num in range(num_lo, num_hi + 1):
                candidates.add(Fraction(num, q))
        if not candidates:
            raise HellyLibError(
                "no rational with denominator <= %d in [%s, %s]; "
                "dim_bound %d appears wrong"
                % (q_max, lower_best, upper_best, dim_bound)
            )
        if len(candidates) == 1 and upper_best - lower_best < width_gate:
            return candidates.pop()
        n *= 2
    raise HellyLibError(
        "bracket %r did not isolate a candidate within the window budget" % (interval,)
    )


# --- combinatorial axes ------------------------------------------------------


@dataclass(frozen=True)
class AxisVertex:
    """A grid vertex x with d(x, g^(a*n) x) = n*L for the tested n."""

    point: tuple
    exponent: int
    length: int


def _verify_periodic_axis(p: PeriodicGraph, node, a: int, L: int) -> bool:
    u, j = node
    return all(
        _window_distance(p, (u, j), (u, j + a * n)) == n * L for n in (1, 2, 3)
    )


def axis_vertex(space, action=None, *, level: int, window: int = 2):
    """Search a window for a combinatorial axis vertex of a hyperbolic action.

    For a LatticeGraph with an AffineAutomorphism, candidates are lattice
    points with coordinates in (1/(2*level!)) Z; for a PeriodicGraph the
    action is its deck transformation and candidates are cover vertices
    (integer-valued extremal functions on every level's grid).  Returns an
    AxisVertex verified for exponents a, 2a, 3a, or None when the window
    search fails; elliptic input is an error.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    if isinstance(space, LatticeGraph):
        if not isinstance(action, AffineAutomorphism) or action.dim != space.dim:
            raise ValueError("lattice axis search needs an AffineAutomorphism of matching dimension")
        tau = affine_translation_length(action)
        if tau == 0:
            raise ValueError("no axis: automorphism is elliptic")
        a_exp = tau.denominator
        length = tau.numerator
        if a_exp > 2 * level:
            raise ValueError(
                "translation length %s needs exponent %d > 2*level; raise level"
                % (tau, a_exp)
            )
        denom = 2 * math.factorial(level)
        coords = [Fraction(k, denom) for k in range(-window * denom, window * denom + 1)]

        def displacement(x, n):
            y = action.apply_power(a_exp * n, x)
            return max(abs(yc - xc) for yc, xc in zip(y, x))

        for x in itertools.product(coords, repeat=space.dim):
            if all(displacement(x, n) == n * length for n in (1, 2, 3)):
                return AxisVertex(point=x, exponent=a_exp, length=length)
        return None
    if isinstance(space, PeriodicGraph):
        if action is not None:
            raise ValueError("periodic graphs carry only the deck transformation")
        tau = deck_translation_length(space, dim_bound=level)
        if tau == 0:
            raise ValueError("no axis: automorphism is elliptic")
        a_exp = tau.denominator
        length = tau.numerator
        for j in sorted(range(-window, window + 1), key=abs):
            for u in space.quotient.vertices:
                node = (u, j)
                if _verify_periodic_axis(space, node, a_exp, length):
                    return AxisVertex(point=node, exponent=a_exp, length=length)
        return None
    raise ValueError("unsupported space %r" % (space,))
