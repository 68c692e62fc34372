"""Clique covering and chromatic numbers recovered from distances.

Turn a graph into a metric space (adjacent pairs close, everything else
far, with b <= 2a so the triangle inequality holds) and sweep the
distance to m-point simplexes: it stays at b while m is small and drops
exactly once m can "resolve" the graph.  The last m before the drop
gives theta(G) = m + 1; running the construction on the complement gives
the chromatic number instead.
"""

from fractions import Fraction

from ghsimplex import (
    chromatic_number,
    chromatic_via_gh,
    clique_cover_direct,
    clique_cover_number,
    clique_cover_via_gh,
    gh_two_distance,
    petersen_graph,
    serialize_graph,
    two_distance_space_from_graph,
)

g = petersen_graph()
a, b = Fraction(1), Fraction(2)
print("Petersen graph:", g.n, "vertices,", g.edge_count, "edges")

# Watch the sweep: value stays b = 2 for m < theta, then drops.
tds = two_distance_space_from_graph(g, a, b)
for m in range(1, 7):
    value = gh_two_distance(tds, m, a).value
    print(f"  m={m}: 2*d_GH(a*simplex_m, V) = {value}")

print("theta via distances:", clique_cover_via_gh(g, a, b))
theta, cover = clique_cover_number(g)
print("theta via complement coloring:", theta, "cover:", cover.blocks)
print("theta via direct branch and bound:", clique_cover_direct(g)[0])

print("gamma via distances:", chromatic_via_gh(g, a, b))
gamma, coloring = chromatic_number(g)
print("gamma via DSATUR search:", gamma, "coloring:", coloring)

# Graphs read and write DIMACS .col and a small JSON format.
print("\nDIMACS form of the Petersen graph:")
print(serialize_graph(g, "dimacs"))
