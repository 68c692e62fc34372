"""Building and validating exact finite metric spaces.

Distances are fractions, never floats, so every comparison downstream
is exact.  The running example is a 4-point space with distances
{1, 2}: two "close" pairs at distance 1, everything else at distance 2.
"""

from ghsimplex import (
    TriangleViolation,
    as_two_distance,
    diameter,
    hausdorff_distance,
    min_distance_graph,
    validate_metric,
)

points = ["x1", "x2", "x3", "x4"]
matrix = [
    [0, 1, 2, 2],
    [1, 0, 2, 2],
    [2, 2, 0, 1],
    [2, 2, 1, 0],
]

space = validate_metric(points, matrix)
print(f"validated {space.n} points, diameter = {diameter(space)}")

# Entries can be fraction or decimal strings; both parse exactly.
tiny = validate_metric(["p", "q", "r"], [[0, "1/3", "0.5"], ["1/3", 0, "1/2"], ["0.5", "1/2", 0]])
print("exact entries:", tiny.dist[0][1], tiny.dist[0][2])

# Validation pinpoints the broken axiom.
try:
    validate_metric(["p", "q", "r"], [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
except TriangleViolation as exc:
    print("rejected:", exc)

# The two-distance view names the small and large values a < b.
tds = as_two_distance(space)
print(f"two-distance view: a = {tds.a}, b = {tds.b}")

# Hausdorff distance between subsets (by point index).
print("d_H({x1}, {x3, x4}) =", hausdorff_distance(space, {0}, {2, 3}))
print("d_H({x1, x2}, {x1, x3}) =", hausdorff_distance(space, {0, 1}, {0, 2}))

# The graph of minimal distances: edges exactly at distance a.
g = min_distance_graph(tds)
print("minimal-distance graph edges:", sorted(g.edges))
