"""Exhaustive partition machinery behind the general distance formula.

For a finite metric space X and 1 <= m <= #X this module enumerates the
partitions of X into m non-empty blocks, computes for each the pair
(separation alpha(D), diameter diam D), collects the set of such pairs,
extracts its non-dominated (extreme) points, and evaluates

    2 d_GH(lambda simplex_m, X)
        = max( diam X - lambda,  min over extreme (alpha, d) of
               max(d, lambda - alpha) )

with the m > #X regime handled by max(diam X - lambda, lambda).

Enumeration is in lexicographic restricted-growth-string order and is
streamed: nothing ever materializes all partitions.  The pair statistics
are carried incrementally down the recursion, and distances are compared
through precomputed integer ranks, so the inner loop never touches
Fraction arithmetic.  A scan may be restricted to the subtree under a
fixed assignment of the first elements, which is how work is split
across processes; merged results are identical to a sequential scan.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .errors import EmptyInput, InvalidM, NonPositiveLambda
from .metric import FiniteMetricSpace, diameter
from .rationals import INF, RationalOrInf


class _AbortScan(Exception):
    """Internal: the running minimum hit its theoretical floor."""


class Partition(NamedTuple):
    """Blocks in canonical form: each sorted, ordered by smallest element."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def assignment(self) -> tuple[int, ...]:
        size = sum(len(b) for b in self.blocks)
        assign = [0] * size
        for bi, block in enumerate(self.blocks):
            for v in block:
                assign[v] = bi
        return tuple(assign)


class ADPoint(NamedTuple):
    alpha: RationalOrInf
    d: Fraction


def partition_from_blocks(blocks: Iterable[Iterable[int]], n: int) -> Partition:
    """Canonicalize and validate a partition of ``range(n)``."""
    norm = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: (b[0] if b else -1))
    flat: list[int] = []
    for block in norm:
        if not block:
            raise ValueError("partition blocks must be non-empty")
        flat.extend(block)
    if sorted(flat) != list(range(n)):
        raise ValueError(f"blocks must partition 0..{n - 1} exactly")
    return Partition(tuple(norm))


def enumerate_partitions(n: int, m: int) -> Iterator[Partition]:
    """All partitions of ``range(n)`` into exactly ``m`` non-empty blocks.

    Yields in lexicographic order of the restricted growth string; the
    count is the Stirling number of the second kind S(n, m).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < 1 or m > n:
        raise InvalidM(m, n)
    assign = [0] * n

    def build() -> Partition:
        blocks: list[list[int]] = [[] for _ in range(m)]
        for j in range(n):
            blocks[assign[j]].append(j)
        return Partition(tuple(tuple(b) for b in blocks))

    def rec(i: int, used: int) -> Iterator[Partition]:
        if i == n:
            yield build()
            return
        # Joining keeps `used` blocks; the remaining n-i-1 elements must
        # still be able to open the m-used missing ones.
        if used + (n - i - 1) >= m:
            for v in range(used):
                assign[i] = v
                yield from rec(i + 1, used)
        if used < m:
            assign[i] = used
            yield from rec(i + 1, used + 1)

    return rec(1, 1) if n > 1 else iter([Partition(((0,),))])


def _check_partition(part: Partition, n: int) -> None:
    flat = sorted(v for block in part.blocks for v in block)
    if flat != list(range(n)):
        raise ValueError(f"partition does not cover 0..{n - 1}")


def partition_diameter(space: FiniteMetricSpace, part: Partition) -> Fraction:
    """Largest block diameter; 0 when every block is a singleton."""
    _check_partition(part, space.n)
    dist = space.dist
    best = Fraction(0)
    for block in part.blocks:
        for x, i in enumerate(block):
            for j in block[x + 1 :]:
                if dist[i][j] > best:
                    best = dist[i][j]
    return best


def partition_alpha(space: FiniteMetricSpace, part: Partition) -> RationalOrInf:
    """Smallest distance between two distinct blocks; INF for one block."""
    _check_partition(part, space.n)
    if part.m == 1:
        return INF
    assign = part.assignment()
    dist = space.dist
    best: Optional[Fraction] = None
    n = space.n
    for i in range(n):
        for j in range(i + 1, n):
            if assign[i] != assign[j] and (best is None or dist[i][j] < best):
                best = dist[i][j]
    assert best is not None
    return best


def _rank_matrix(space: FiniteMetricSpace) -> tuple[list[Fraction], list[list[int]]]:
    """Distinct off-diagonal values sorted ascending, and the matrix of their indices."""
    n = space.n
    values = sorted(space.off_diagonal_values())
    lookup = {v: r for r, v in enumerate(values)}
    rank = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rank[i][j] = rank[j][i] = lookup[space.dist[i][j]]
    return values, rank


def _prefix_state(
    prefix: Sequence[int], rank: Sequence[Sequence[int]], m: int, n: int, big: int
) -> tuple[int, int, int]:
    """used blocks, diameter rank and separation rank of a partial assignment."""
    if not prefix or prefix[0] != 0:
        raise ValueError("a scan prefix must start with block 0")
    used = 0
    for v in prefix:
        if v > used:
            raise ValueError("prefix is not a restricted growth string")
        if v >= m:
            raise ValueError(f"prefix uses more than m={m} blocks")
        used = max(used, v + 1)
    d_cur = -1
    a_cur = big
    for i in range(len(prefix)):
        for j in range(i):
            r = rank[i][j]
            if prefix[i] == prefix[j]:
                if r > d_cur:
                    d_cur = r
            elif r < a_cur:
                a_cur = r
    if used + (n - len(prefix)) < m:
        raise ValueError("prefix cannot be completed to m blocks")
    return used, d_cur, a_cur


def _scan_pairs(
    rank: Sequence[Sequence[int]],
    n: int,
    m: int,
    prefix: Optional[Sequence[int]] = None,
) -> set[tuple[int, int]]:
    """Set of (separation rank, diameter rank) over the scanned partitions.

    Rank -1 stands for an all-singleton diameter (0); rank ``n*n`` stands
    for the empty separation infimum (+infinity, one block only).
    """
    big = n * n
    out: set[tuple[int, int]] = set()
    if prefix is None:
        prefix = (0,)
    used0, d0, a0 = _prefix_state(prefix, rank, m, n, big)
    start = len(prefix)
    assign = list(prefix) + [0] * (n - start)
    if start == n:
        if used0 == m:
            out.add((a0, d0))
        return out
    last = n - 1

    def rec(i: int, used: int, d_cur: int, a_cur: int) -> None:
        row = rank[i]
        bmax = [0] * used
        bmin = [big] * used
        for j in range(i):
            v = assign[j]
            r = row[j]
            if r > bmax[v]:
                bmax[v] = r
            if r < bmin[v]:
                bmin[v] = r
        # Two smallest per-block minima give min-over-other-blocks in O(1).
        m1 = big
        m2 = big
        arg1 = -1
        for v in range(used):
            bv = bmin[v]
            if bv < m1:
                m2 = m1
                m1 = bv
                arg1 = v
            elif bv < m2:
                m2 = bv
        can_join = used + (n - i - 1) >= m
        if i == last:
            if can_join:
                for v in range(used):
                    d2 = bmax[v]
                    if d2 < d_cur:
                        d2 = d_cur
                    oth = m2 if v == arg1 else m1
                    a2 = oth if oth < a_cur else a_cur
                    out.add((a2, d2))
            if used < m:
                a2 = m1 if m1 < a_cur else a_cur
                out.add((a2, d_cur))
            return
        if can_join:
            for v in range(used):
                d2 = bmax[v]
                if d2 < d_cur:
                    d2 = d_cur
                oth = m2 if v == arg1 else m1
                a2 = oth if oth < a_cur else a_cur
                assign[i] = v
                rec(i + 1, used, d2, a2)
        if used < m:
            a2 = m1 if m1 < a_cur else a_cur
            assign[i] = used
            rec(i + 1, used + 1, d_cur, a2)

    rec(start, used0, d0, a0)
    return out


def _pairs_to_points(
    pairs: Iterable[tuple[int, int]], values: Sequence[Fraction], big: int
) -> frozenset[ADPoint]:
    out = set()
    for a, d in pairs:
        alpha: RationalOrInf = INF if a >= big else values[a]
        dval = Fraction(0) if d < 0 else values[d]
        out.add(ADPoint(alpha, dval))
    return frozenset(out)


def ad_set(
    space: FiniteMetricSpace, m: int, prefix: Optional[Sequence[int]] = None
) -> frozenset[ADPoint]:
    """The set of (alpha(D), diam D) pairs over all m-block partitions.

    ``prefix`` restricts the scan to partitions extending that restricted
    growth string; a full scan uses no prefix.
    """
    n = space.n
    if m < 1 or m > n:
        raise InvalidM(m, n)
    values, rank = _rank_matrix(space)
    pairs = _scan_pairs(rank, n, m, prefix)
    return _pairs_to_points(pairs, values, n * n)


def scan_prefixes(n: int, m: int, depth: int) -> tuple[tuple[int, ...], ...]:
    """Feasible restricted-growth prefixes of the given length, in scan order.

    Every m-block partition of ``range(n)`` extends exactly one of them,
    so per-prefix scans split the work without overlap.
    """
    if m < 1 or m > n:
        raise InvalidM(m, n)
    depth = max(1, min(depth, n))
    out: list[tuple[int, ...]] = []

    def rec(cur: list[int], used: int) -> None:
        if len(cur) == depth:
            if used + (n - depth) >= m:
                out.append(tuple(cur))
            return
        for v in range(min(used + 1, m)):
            cur.append(v)
            rec(cur, max(used, v + 1))
            cur.pop()

    rec([0], 1)
    return tuple(out)


def _ad_pairs_for_prefix(
    space: FiniteMetricSpace, m: int, prefix: tuple[int, ...]
) -> frozenset[tuple[int, int]]:
    values, rank = _rank_matrix(space)
    return frozenset(_scan_pairs(rank, space.n, m, prefix))


def ad_set_parallel(
    space: FiniteMetricSpace,
    m: int,
    prefix_depth: int = 3,
    max_workers: Optional[int] = None,
) -> frozenset[ADPoint]:
    """Split the scan across processes by prefix; the union equals :func:`ad_set`."""
    n = space.n
    if m < 1 or m > n:
        raise InvalidM(m, n)
    prefixes = scan_prefixes(n, m, prefix_depth)
    values, _ = _rank_matrix(space)
    pairs: set[tuple[int, int]] = set()
    worker = partial(_ad_pairs_for_prefix, space, m)
    if max_workers is not None and max_workers <= 1:
        for pfx in prefixes:
            pairs |= worker(pfx)
    else:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            for chunk in pool.map(worker, prefixes, chunksize=max(1, len(prefixes) // 16)):
                pairs |= chunk
    return _pairs_to_points(pairs, values, n * n)


def extreme_points(ad: Iterable[Union[ADPoint, tuple]]) -> frozenset[ADPoint]:
    """Non-dominated subset: keep (alpha, d) unless some other point has
    alpha' >= alpha and d' <= d."""
    pts = {ADPoint(a, d) for a, d in ad}
    if not pts:
        raise EmptyInput("cannot take extreme points of an empty set")
    keep = [
        p
        for p in pts
        if not any(q != p and q.alpha >= p.alpha and q.d <= p.d for q in pts)
    ]
    return frozenset(keep)


def h_value(point: ADPoint, lam: Fraction) -> Fraction:
    """max(d, lambda - alpha); the alpha = INF convention makes this d."""
    if point.alpha == INF:
        return point.d
    return max(point.d, lam - point.alpha)


def _exact(lam: Union[Fraction, int, str]) -> Fraction:
    if isinstance(lam, bool) or isinstance(lam, float):
        raise TypeError("lambda must be exact (int, str or Fraction)")
    return Fraction(lam)


def _min_h_scan(space: FiniteMetricSpace, m: int, lam: Fraction) -> Fraction:
    """Branch-and-bound minimum of h over all m-block partitions.

    Both statistics move one way as elements are assigned (diameter can
    only grow, separation only shrink), so h never decreases along a
    branch; a branch at or above the incumbent is cut, and the whole scan
    stops once the incumbent reaches the theoretical floor
    max(0, lambda - largest distance).
    """
    n = space.n
    values, rank = _rank_matrix(space)
    big = n * n
    zero = Fraction(0)
    floor = max(zero, lam - values[-1]) if values else zero

    h_cache: dict[tuple[int, int], Fraction] = {}

    def h_of(a_cur: int, d_cur: int) -> Fraction:
        key = (a_cur, d_cur)
        got = h_cache.get(key)
        if got is None:
            dval = zero if d_cur < 0 else values[d_cur]
            got = dval if a_cur >= big else max(dval, lam - values[a_cur])
            h_cache[key] = got
        return got

    # Incumbent starts above every achievable h; only real leaves lower it.
    best: list[RationalOrInf] = [INF]

    assign = [0] * n
    if n == 1:
        return zero

    def rec(i: int, used: int, d_cur: int, a_cur: int) -> None:
        row = rank[i]
        bmax = [0] * used
        bmin = [big] * used
        for j in range(i):
            v = assign[j]
            r = row[j]
            if r > bmax[v]:
                bmax[v] = r
            if r < bmin[v]:
                bmin[v] = r
        m1 = big
        m2 = big
        arg1 = -1
        for v in range(used):
            bv = bmin[v]
            if bv < m1:
                m2 = m1
                m1 = bv
                arg1 = v
            elif bv < m2:
                m2 = bv
        can_join = used + (n - i - 1) >= m
        last = i == n - 1
        if can_join:
            for v in range(used):
                d2 = bmax[v]
                if d2 < d_cur:
                    d2 = d_cur
                oth = m2 if v == arg1 else m1
                a2 = oth if oth < a_cur else a_cur
                h2 = h_of(a2, d2)
                if h2 >= best[0]:
                    continue
                if last:
                    best[0] = h2
                    if h2 <= floor:
                        raise _AbortScan
                else:
                    assign[i] = v
                    rec(i + 1, used, d2, a2)
        if used < m:
            a2 = m1 if m1 < a_cur else a_cur
            h2 = h_of(a2, d_cur)
            if h2 < best[0]:
                if last:
                    best[0] = h2
                    if h2 <= floor:
                        raise _AbortScan
                else:
                    assign[i] = used
                    rec(i + 1, used + 1, d_cur, a2)

    try:
        rec(1, 1, -1, big)
    except _AbortScan:
        pass
    result = best[0]
    assert isinstance(result, Fraction)
    return result


def gh_oracle(
    space: FiniteMetricSpace,
    m: int,
    lam: Union[Fraction, int, str],
    full_scan: bool = False,
) -> Fraction:
    """Twice the Gromov-Hausdorff distance from the m-point simplex with
    side ``lam`` to ``space``, by exhaustive partition scan.

    ``full_scan=True`` disables the branch-and-bound early exit and
    minimizes over the complete pair set instead; both modes return the
    same value.
    """
    lam = _exact(lam)
    if lam <= 0:
        raise NonPositiveLambda(lam)
    if m < 1:
        raise InvalidM(m, space.n)
    diam = diameter(space)
    if m > space.n:
        return max(diam - lam, lam)
    if full_scan:
        best = min(h_value(p, lam) for p in ad_set(space, m))
    else:
        best = _min_h_scan(space, m, lam)
    return max(diam - lam, best)
