"""Partition statistics and the extreme points that drive the distance.

For each partition D of a space into m blocks two numbers matter: the
largest block diameter (diam D) and the smallest distance between two
different blocks (alpha(D)).  Minimizing max(diam D, lambda - alpha(D))
over partitions is the hard half of the distance to an m-point simplex,
and only the non-dominated (alpha, d) pairs can ever win.
"""

from fractions import Fraction

from ghsimplex import (
    ad_set,
    enumerate_partitions,
    extreme_points,
    gh_oracle,
    h_value,
    partition_alpha,
    partition_diameter,
    validate_metric,
)

space = validate_metric(
    ["x1", "x2", "x3", "x4"],
    [[0, 1, 2, 2], [1, 0, 2, 2], [2, 2, 0, 1], [2, 2, 1, 0]],
)

print("all partitions of 4 points into 2 blocks (lexicographic order):")
for part in enumerate_partitions(4, 2):
    alpha = partition_alpha(space, part)
    d = partition_diameter(space, part)
    names = [" ".join(space.points[i] for i in blk) for blk in part.blocks]
    print(f"  {' | '.join(names):24s}  alpha = {alpha}, diam = {d}")

# Deduplicated, those pairs form a small planar set...
pairs = ad_set(space, 2)
print("distinct (alpha, diam) pairs:", sorted(pairs))

# ...and only its staircase of non-dominated points matters.
ext = extreme_points(pairs)
print("extreme points:", sorted(ext))

lam = Fraction(1)
for p in sorted(ext):
    print(f"  h at lambda={lam} for {tuple(p)}: {h_value(p, lam)}")

# The oracle wraps it all up: 2 * d_GH(simplex_2 with side 1, space).
print("2*d_GH =", gh_oracle(space, 2, lam))

# Counts grow fast, but enumeration streams one partition at a time.
count = sum(1 for _ in enumerate_partitions(9, 4))
print("S(9, 4) =", count)
