#!/usr/bin/env python3
"""Grid vertices of the injective hull, with exact rational arithmetic.

The injective hull of a graph is realized by its extremal functions under
the sup metric.  The level-N grid keeps the extremal functions whose
values lie in (1/(2*N!))*N; at level 1 these are exactly the round
cliques, and points of the orthoscheme complex carry exact barycentric
arithmetic.
"""

from fractions import Fraction as F

from hellygraph import (
    Graph,
    clique_to_extremal,
    extremal_to_clique,
    grid_graph,
    hull_grid_vertices,
    orthoscheme_point,
    point_distance,
    point_eval,
    round_cliques,
    sup_distance,
)

p3 = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])

print("== half-integer extremal functions of the path a-b-c ==")
functions = hull_grid_vertices(p3, 1)
for f in functions:
    clique = extremal_to_clique(p3, f)
    print(
        "   (%s)  <->  {%s}"
        % (", ".join(str(x) for x in f.values), ",".join(sorted(clique)))
    )
print("count matches round cliques:", len(functions) == len(round_cliques(p3)))

print()
print("== the grid graph is the first subdivision ==")
sub = grid_graph(p3, 1)
print("edge length:", sub.edge_length)
for f, h in sub.edges():
    print(
        "   (%s) -- (%s)"
        % (", ".join(map(str, f.values)), ", ".join(map(str, h.values)))
    )

print()
print("== quarter-integer grid refines the half-integer grid ==")
level2 = hull_grid_vertices(p3, 2)
print("level 1: %d vertices, level 2: %d vertices" % (len(functions), len(level2)))
values1 = {f.values for f in functions}
values2 = {f.values for f in level2}
print("level 1 contained in level 2:", values1 <= values2)

print()
print("== exact barycentric point arithmetic ==")
f_b = clique_to_extremal(p3, ["b"])
f_ab = clique_to_extremal(p3, ["a", "b"])
p = orthoscheme_point(1, [(f_b, 1)])
q = orthoscheme_point(1, [(f_b, F(1, 2)), (f_ab, F(1, 2))])
print("q = (f_b + f_ab)/2")
for x in p3.vertices:
    print("   d(q, %s) = %s" % (x, point_eval(q, x)))
print("d(p, q) =", point_distance(p, q, p3))
print("single-support distance equals the sup metric:",
      point_distance(p, orthoscheme_point(1, [(f_ab, 1)]), p3)
      == sup_distance(f_b, f_ab))
