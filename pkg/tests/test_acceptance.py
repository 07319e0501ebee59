"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Criterion 11 fails: the n!-divisibility claim it tests is falsified by an
explicit 7x7 counterexample (determinant 31); see the decisions ledger.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from hellygraph import (
    AffineAutomorphism,
    Graph,
    HellyLibError,
    affine_length_estimate,
    affine_translation_length,
    check_automorphism,
    clique_to_extremal,
    combinatorial_dimension,
    complete_graph,
    distinct_balls,
    elliptic_witness,
    enumerate_trees,
    extremal_to_clique,
    first_subdivision,
    fixed_set_distance,
    hull_grid_vertices,
    identity_automorphism,
    induced_on_round_cliques,
    is_helly,
    is_helly_bruteforce,
    king_grid,
    min_mean_cycle,
    round_cliques,
    solve_pm1_system,
    star_graph,
    sup_distance,
    WeightedDigraph,
)
from oracles import all_automorphisms, brute_min_mean_cycle

F = Fraction


def report(number, description, elapsed, failures, budget=None):
    status = "PASS" if not failures else "FAIL"
    extra = "" if budget is None else " (budget %ds)" % budget
    print(
        "[criterion %2d] %s: %s in %.1fs%s"
        % (number, description, status, elapsed, extra)
    )
    assert not failures, failures[:5]
    if budget is not None:
        assert elapsed < budget, "exceeded time budget of %ds" % budget


def test_criterion_01_helly_recognition(connected_corpus, named_families):
    start = time.monotonic()
    failures = []
    for g in list(connected_corpus) + list(named_families):
        nballs = len(distinct_balls(g))
        triple = is_helly(g).helly
        brute = is_helly_bruteforce(g, nballs, max_vertices=16)
        if triple != brute:
            failures.append((g.edges(), triple, brute))
    report(
        1,
        "triple-criterion Helly recognition agrees with exhaustive search on "
        "%d graphs" % (len(connected_corpus) + len(named_families)),
        time.monotonic() - start,
        failures,
        budget=300,
    )


def test_criterion_02_bijection(helly_corpus):
    start = time.monotonic()
    failures = []
    for g in helly_corpus:
        poset = round_cliques(g)
        functions = hull_grid_vertices(g, 1)
        image = set()
        for c in poset.elements:
            f = clique_to_extremal(g, c)
            image.add(f)
            if extremal_to_clique(g, f) != c:
                failures.append(("clique roundtrip", g.edges(), sorted(c)))
        if image != set(functions):
            failures.append(("image mismatch", g.edges()))
        for f in functions:
            if clique_to_extremal(g, extremal_to_clique(g, f)) != f:
                failures.append(("function roundtrip", g.edges(), f.values))
    report(
        2,
        "round cliques and half-integer grid vertices are mutually inverse on "
        "%d Helly graphs" % len(helly_corpus),
        time.monotonic() - start,
        failures,
        budget=120,
    )


def test_criterion_03_subdivision_consistency(helly_corpus):
    start = time.monotonic()
    failures = []
    for g in helly_corpus:
        sub = first_subdivision(g)
        f_of = {v: clique_to_extremal(g, frozenset(v)) for v in sub.vertices}
        for i, a in enumerate(sub.vertices):
            for b in sub.vertices[i + 1 :]:
                expected = sup_distance(f_of[a], f_of[b]) == F(1, 2)
                if sub.graph.is_adjacent(a, b) != expected:
                    failures.append(("edge rule", g.edges(), a, b))
        for u in g.vertices:
            for v in g.vertices:
                if sub.graph.distance((u,), (v,)) != 2 * g.distance(u, v):
                    failures.append(("homothety", g.edges(), u, v))
    report(
        3,
        "first subdivision matches the sup-1/2 grid graph and doubles "
        "distances on %d Helly graphs" % len(helly_corpus),
        time.monotonic() - start,
        failures,
    )


def test_criterion_04_subdivision_helly(helly_corpus):
    start = time.monotonic()
    failures = []
    graphs = [g for g in helly_corpus if g.vertex_count <= 6]
    for g in graphs:
        sub = first_subdivision(g)
        if not is_helly(sub.graph).helly:
            failures.append(g.edges())
    report(
        4,
        "first subdivisions of %d Helly graphs (<= 6 vertices) are Helly"
        % len(graphs),
        time.monotonic() - start,
        failures,
    )


def test_criterion_05_dimension_values():
    start = time.monotonic()
    failures = []
    if combinatorial_dimension(Graph(["v"], [])) != 0:
        failures.append("single vertex")
    for n in range(2, 11):
        for t in enumerate_trees(n):
            if combinatorial_dimension(t) != 1:
                failures.append(("tree", n, t.edges()))
    for n in range(2, 7):
        if combinatorial_dimension(complete_graph(n)) != 1:
            failures.append(("complete", n))
    for k in (3, 4):
        if combinatorial_dimension(king_grid(k, k)) != 2:
            failures.append(("king", k))
    report(
        5,
        "combinatorial dimension: trees 1, K_n 1, king windows 2, point 0",
        time.monotonic() - start,
        failures,
    )


def test_criterion_06_lattice_example():
    start = time.monotonic()
    failures = []
    g = AffineAutomorphism.from_one_indexed([2, 3, 1], shift=[1, 0, 0])
    tau = affine_translation_length(g)
    if tau != F(1, 3):
        failures.append(("exact", tau))
    estimate = affine_length_estimate(g, 30)[29]
    if abs(estimate - tau) > F(1, 30):
        failures.append(("estimate", estimate))
    report(
        6,
        "cyclic shift on Z^3 has translation length exactly 1/3",
        time.monotonic() - start,
        failures,
        budget=1,
    )


def test_criterion_07_denominator_bound():
    start = time.monotonic()
    failures = []
    rng = random.Random(551)
    for _ in range(10**4):
        n = rng.randint(1, 6)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        a = AffineAutomorphism.from_one_indexed(
            perm,
            signs=[rng.choice((-1, 1)) for _ in range(n)],
            shift=[rng.randint(-5, 5) for _ in range(n)],
        )
        tau = affine_translation_length(a)
        if tau.denominator > 2 * n:
            failures.append((a, tau))
    report(
        7,
        "translation-length denominators of 10^4 random lattice "
        "automorphisms stay within 2n",
        time.monotonic() - start,
        failures,
        budget=60,
    )


def test_criterion_08_min_mean_cycle():
    start = time.monotonic()
    failures = []
    rng = random.Random(88)
    tested = 0
    while tested < 10**3:
        n = rng.randint(2, 8)
        nodes = list(range(n))
        arcs = [
            (u, v, rng.randint(-5, 5))
            for u in nodes
            for v in nodes
            if rng.random() < 0.3
        ]
        expected = brute_min_mean_cycle(nodes, arcs)
        if expected is None:
            continue
        tested += 1
        got = min_mean_cycle(WeightedDigraph.build(nodes, arcs)).mean
        if got != expected:
            failures.append((arcs, got, expected))
    report(
        8,
        "Karp minimum mean equals brute-force cycle enumeration on 10^3 "
        "random digraphs",
        time.monotonic() - start,
        failures,
    )


def test_criterion_09_elliptic_witnesses(helly_corpus):
    start = time.monotonic()
    failures = []
    autos_total = 0
    for g in helly_corpus:
        poset = round_cliques(g)
        chains = poset.maximal_chains()
        for a in all_automorphisms(g):
            autos_total += 1
            w = elliptic_witness(g, [a])
            if a.apply_set(w) != w:
                failures.append(("witness", g.edges(), a.images))
            image = induced_on_round_cliques(a, poset)
            for chain in chains:
                if {image[c] for c in chain} == set(chain):
                    if any(image[c] != c for c in chain):
                        failures.append(("chain", g.edges(), a.images, chain))
    report(
        9,
        "every one of %d automorphisms over %d Helly graphs is elliptic with "
        "a stabilized round clique; stabilized chains are fixed elementwise"
        % (autos_total, len(helly_corpus)),
        time.monotonic() - start,
        failures,
    )


def _desk_scale_instances():
    p3 = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    p4 = Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
    star = star_graph(3)
    k4 = complete_graph(4)
    diamond = Graph(
        ["0", "1", "2", "3"],
        [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"), ("2", "3")],
    )
    return [
        (p3, [{"a": "c", "b": "b", "c": "a"}], None),
        (p4, [{"a": "d", "b": "c", "c": "b", "d": "a"}], None),
        (star, [{"c": "c", "1": "2", "2": "1", "3": "3"}],
         [{"c": "c", "1": "1", "2": "3", "3": "2"}]),
        (k4, [{"0": "1", "1": "0", "2": "2", "3": "3"}],
         [{"0": "0", "1": "1", "2": "3", "3": "2"}]),
        (diamond, [{"0": "1", "1": "0", "2": "2", "3": "3"}],
         [{"0": "0", "1": "1", "2": "3", "3": "2"}]),
    ]


def test_criterion_10_fixed_set_distance():
    start = time.monotonic()
    failures = []
    for g, gens_g_maps, gens_h_maps in _desk_scale_instances():
        instance_start = time.monotonic()
        gens_g = [check_automorphism(g, m) for m in gens_g_maps]
        gens_h = (
            [check_automorphism(g, m) for m in gens_h_maps]
            if gens_h_maps
            else [identity_automorphism(g)]
        )
        values = {
            res: fixed_set_distance(g, gens_g, gens_h, res).dist
            for res in (2, 4, 48)
        }
        if not (values[2] >= values[4] >= values[48]):
            failures.append(("monotone", g.edges(), values))
        if values[4] != values[48]:
            failures.append(("stabilization", g.edges(), values))
        n_param = combinatorial_dimension(g) + 1
        bound = 2 * math.factorial(2 * n_param)
        if bound % values[48].denominator:
            failures.append(("denominator", g.edges(), values[48]))
        if time.monotonic() - instance_start > 600:
            failures.append(("time", g.edges()))
    report(
        10,
        "fixed-set distances stabilize under 1/2 -> 1/4 -> 1/48 refinement "
        "with denominators dividing 2*(2N)!",
        time.monotonic() - start,
        failures,
    )


def test_criterion_11_pm1_denominators():
    # Faithful to the stated criterion; it FAILS because the divisibility
    # claim is false (det-31 counterexample, see the decisions ledger).
    start = time.monotonic()
    failures = []
    rng = random.Random(31337)
    tested = 0
    while tested < 10**4:
        n = rng.randint(1, 7)
        A = [[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)]
        y = [rng.randint(-9, 9) for _ in range(n)]
        try:
            x = solve_pm1_system(A, y)
        except ValueError:
            continue  # singular
        except HellyLibError as exc:
            tested += 1
            failures.append((n, str(exc)))
            continue
        tested += 1
        if any(math.factorial(n) % v.denominator for v in x):
            failures.append((n, [str(v) for v in x]))
    report(
        11,
        "solution denominators of 10^4 random {-1,0,1} systems divide n! "
        "(known-false claim; see decisions ledger)",
        time.monotonic() - start,
        failures,
    )
