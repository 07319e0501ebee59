#!/usr/bin/env python3
"""Round cliques and the first subdivision.

A clique is round when it is an intersection of balls; equivalently it is
a single vertex or an intersection of maximal cliques.  Round cliques are
the vertices of the first subdivision, which halves edge lengths: base
vertices sit at even distances, and the longest chain of round cliques is
the combinatorial dimension of the graph.
"""

from hellygraph import (
    Graph,
    combinatorial_dimension,
    complete_graph,
    first_subdivision,
    is_round,
    king_grid,
    maximal_cliques,
    path_graph,
    round_cliques,
)

p3 = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])

print("== the path a-b-c ==")
print("maximal cliques:", [sorted(c) for c in maximal_cliques(p3)])
poset = round_cliques(p3)
print("round cliques:  ", [sorted(c) for c in poset.elements])
sub = first_subdivision(p3)
print("subdivision edges (length %s):" % sub.edge_length)
for a, b in sub.edges():
    print("   {%s} -- {%s}" % (",".join(a), ",".join(b)))

print()
print("== the diamond: an edge cut out by balls around non-members ==")
diamond = Graph(
    ["0", "1", "2", "3"],
    [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"), ("2", "3")],
)
print("maximal cliques:", [sorted(c) for c in maximal_cliques(diamond)])
print("is_round({2,3}):", is_round(diamond, ["2", "3"]))
print("   ({2,3} = B(0,1) & B(1,1); the unit balls around 2 and 3 are everything)")

print()
print("== dimension = longest chain of round cliques ==")
for name, g in [
    ("single vertex", Graph(["v"], [])),
    ("path P6", path_graph(6)),
    ("K5", complete_graph(5)),
    ("king 3x3", king_grid(3, 3)),
    ("king 4x4", king_grid(4, 4)),
]:
    print("%-14s dimension %d" % (name, combinatorial_dimension(g)))

print()
print("== subdividing doubles distances ==")
g = king_grid(2, 3)
sub = first_subdivision(g)
for u, v in [("0,0", "1,2"), ("0,1", "0,2")]:
    print(
        "d(%s, %s) = %d, subdivision hop distance = %d"
        % (u, v, g.distance(u, v), sub.graph.distance((u,), (v,)))
    )
