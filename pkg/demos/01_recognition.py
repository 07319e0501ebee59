#!/usr/bin/env python3
"""Which graphs are Helly?

A connected graph is Helly when every family of pairwise intersecting
balls has a common vertex.  Trees and king grids are; cycles of length
at least four are not, and the recognizer hands back a certifying family
of balls.
"""

from hellygraph import (
    cycle_graph,
    distinct_balls,
    enumerate_connected_graphs,
    is_helly,
    is_helly_bruteforce,
    king_grid,
    path_graph,
)

print("== small named graphs ==")
for name, g in [
    ("path P5", path_graph(5)),
    ("cycle C4", cycle_graph(4)),
    ("cycle C5", cycle_graph(5)),
    ("king 3x3", king_grid(3, 3)),
]:
    res = is_helly(g)
    print("%-10s helly=%s" % (name, res.helly))
    if res.witness:
        for b in res.witness:
            print(
                "    B(%s, %d) = {%s}"
                % (b.center, b.radius, ", ".join(sorted(b.members)))
            )
        print("    pairwise intersecting, empty global intersection")

print()
print("== the exhaustive oracle agrees ==")
c6 = cycle_graph(6)
print("C6: triple criterion ->", is_helly(c6).helly)
print("C6: families of <= 3 balls ->", is_helly_bruteforce(c6, 3))
print("C6: families of <= 2 balls ->", is_helly_bruteforce(c6, 2), "(two")
print("    pairwise intersecting balls always share a vertex by definition)")

print()
print("== census over all connected graphs with at most 6 vertices ==")
for n in range(1, 7):
    graphs = enumerate_connected_graphs(n)
    helly = sum(1 for g in graphs if is_helly(g).helly)
    print("n=%d: %4d graphs, %4d Helly" % (n, len(graphs), helly))

print()
print("== witness sizes are inclusion-minimal ==")
for n in (4, 5, 6, 7, 8):
    res = is_helly(cycle_graph(n))
    print("C%d: witness of %d balls" % (n, len(res.witness)))
