"""Simple undirected graphs and exact solvers for their covering numbers.

The two optimization routines here are deliberately independent of each
other: ``chromatic_number`` is a DSATUR-ordered branch-and-bound colorer,
while ``clique_cover_direct`` branches over clique partitions without ever
touching a coloring.  ``clique_cover_number`` ties them together through
the complement-graph identity theta(H) = gamma(H'), and the test suite
holds the two routes to exact agreement.

Solvers are exact and deterministic (ties always break toward the lowest
vertex index); they are sized for desk-scale instances, roughly n <= 40.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import EmptySubset, NodeLimitExceeded, SelfLoop, VertexOutOfRange


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of vertex pairs; it is
    normalized to a frozenset of ``(u, v)`` tuples with ``u < v``.
    Instances are immutable and hashable.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise SelfLoop(u)
            for w in (u, v):
                if not isinstance(w, int) or isinstance(w, bool) or not 0 <= w < self.n:
                    raise VertexOutOfRange(w, self.n)
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; the workhorse of the exact solvers."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_edgeless(self) -> bool:
        return self.edge_count == 0


@dataclass(frozen=True)
class CliqueCover:
    """A partition of the vertex set into cliques, blocks sorted by smallest member."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.blocks)


def graph_from_edges(n: int, edges: Iterable[Iterable[int]]) -> SimpleGraph:
    return SimpleGraph(n, frozenset(tuple(e) for e in edges))


def connected_components(g: SimpleGraph) -> tuple[int, tuple[int, ...]]:
    """Number of components and a vertex -> component-id labeling.

    Component ids are assigned in order of each component's smallest vertex.
    """
    labels = [-1] * g.n
    adj = g.neighbors
    k = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = k
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if labels[w] == -1:
                    labels[w] = k
                    stack.append(w)
        k += 1
    return k, tuple(labels)


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = set()
    for u in range(g.n):
        row = g.neighbors[u]
        for v in range(u + 1, g.n):
            if v not in row:
                edges.add((u, v))
    return SimpleGraph(g.n, frozenset(edges))


def is_clique(g: SimpleGraph, s: Iterable[int]) -> bool:
    """True iff every pair in ``s`` is adjacent; singletons count as cliques."""
    members = sorted(set(s))
    if not members:
        raise EmptySubset("a clique candidate must be non-empty")
    for v in members:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(v, g.n)
    for i, u in enumerate(members):
        row = g.neighbors[u]
        for v in members[i + 1 :]:
            if v not in row:
                return False
    return True


def is_cluster_graph(g: SimpleGraph) -> bool:
    """True iff every connected component induces a complete subgraph."""
    k, labels = connected_components(g)
    members: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(labels):
        members[c].append(v)
    return all(is_clique(g, comp) for comp in members)


def _dsatur_greedy(g: SimpleGraph) -> list[int]:
    """Greedy DSATUR coloring; an upper bound and the initial incumbent."""
    n = g.n
    adj = g.adjacency_bits
    colors = [-1] * n
    sat_masks = [0] * n
    degrees = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        best_v = -1
        best_key = (-1, -1, 1)
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (sat_masks[v].bit_count(), degrees[v], -v)
            if key > best_key:
                best_key = key
                best_v = v
        c = 0
        while (sat_masks[best_v] >> c) & 1:
            c += 1
        colors[best_v] = c
        mask = adj[best_v]
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            sat_masks[w] |= 1 << c
    return colors


def _greedy_clique(g: SimpleGraph) -> list[int]:
    """A maximal clique grown greedily by descending degree; a lower bound for coloring."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    clique_mask = 0
    adj = g.adjacency_bits
    for v in order:
        if clique_mask & ~adj[v] == 0:
            clique.append(v)
            clique_mask |= 1 << v
    return sorted(clique)


def _normalize_coloring(colors: list[int]) -> tuple[int, tuple[int, ...]]:
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return len(relabel), tuple(out)


def chromatic_number(
    g: SimpleGraph, node_limit: Optional[int] = None
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper coloring witness.

    DSATUR-ordered branch-and-bound seeded with a greedy upper bound and a
    greedy-clique lower bound.  The clique vertices are pre-colored, which
    breaks color symmetry without affecting exactness.  ``node_limit``
    bounds the number of branching decisions; exceeding it raises
    :class:`NodeLimitExceeded` instead of returning an approximation.
    """
    n = g.n
    if n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    if g.is_edgeless():
        return 1, (0,) * n
    adj = g.adjacency_bits
    degrees = [adj[v].bit_count() for v in range(n)]

    incumbent = _dsatur_greedy(g)
    best_k, best = _normalize_coloring(incumbent)
    clique = _greedy_clique(g)
    lower = len(clique)
    if lower == best_k:
        return best_k, best

    colors = [-1] * n
    sat_masks = [0] * n
    for c, v in enumerate(clique):
        colors[v] = c
        mask = adj[v]
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            sat_masks[w] |= 1 << c
    nodes = 0

    class _Done(Exception):
        pass

    def search(colored: int, used: int):
        nonlocal best_k, best, nodes
        if used >= best_k:
            return
        if colored == n:
            best_k, best = _normalize_coloring(colors)
            if best_k == lower:
                raise _Done
            return
        if node_limit is not None:
            if nodes >= node_limit:
                raise NodeLimitExceeded(f"exceeded node limit {node_limit}")
            nodes += 1
        v = -1
        v_key = (-1, -1, 1)
        for u in range(n):
            if colors[u] == -1:
                key = (sat_masks[u].bit_count(), degrees[u], -u)
                if key > v_key:
                    v_key = key
                    v = u
        limit = min(used + 1, best_k - 1)
        for c in range(limit):
            if (sat_masks[v] >> c) & 1:
                continue
            colors[v] = c
            touched = []
            bit = 1 << c
            mask = adj[v]
            while mask:
                w = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if colors[w] == -1 and not sat_masks[w] & bit:
                    sat_masks[w] |= bit
                    touched.append(w)
            search(colored + 1, max(used, c + 1))
            colors[v] = -1
            for w in touched:
                sat_masks[w] &= ~bit

    try:
        search(len(clique), lower)
    except _Done:
        pass
    return best_k, best


def _greedy_clique_partition(g: SimpleGraph) -> list[int]:
    """First-fit clique partition in vertex order; an upper bound."""
    adj = g.adjacency_bits
    block_masks: list[int] = []
    assign = [0] * g.n
    for v in range(g.n):
        for i, mask in enumerate(block_masks):
            if mask & ~adj[v] == 0:
                block_masks[i] |= 1 << v
                assign[v] = i
                break
        else:
            assign[v] = len(block_masks)
            block_masks.append(1 << v)
    return assign


def _blocks_from_assignment(assign: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for v, b in enumerate(assign):
        groups.setdefault(b, []).append(v)
    blocks = sorted((tuple(sorted(ms)) for ms in groups.values()), key=lambda t: t[0])
    return tuple(blocks)


def clique_cover_direct(
    g: SimpleGraph, node_limit: Optional[int] = None
) -> tuple[int, CliqueCover]:
    """Minimum clique partition by direct branch-and-bound.

    Never consults the coloring solver; this is the independent second
    route for the theta(H) = gamma(H') cross-check.
    """
    n = g.n
    if n < 1:
        raise ValueError("clique cover needs at least one vertex")
    adj = g.adjacency_bits
    greedy = _greedy_clique_partition(g)
    best_count = max(greedy) + 1
    best = list(greedy)
    if best_count > 1:
        assign = [-1] * n
        nodes = 0

        def search(v: int, block_masks: list[int]):
            nonlocal best_count, best, nodes
            if len(block_masks) >= best_count:
                return
            if v == n:
                best_count = len(block_masks)
                best = assign[:]
                return
            if node_limit is not None:
                if nodes >= node_limit:
                    raise NodeLimitExceeded(f"exceeded node limit {node_limit}")
                nodes += 1
            av = adj[v]
            bit = 1 << v
            for i, mask in enumerate(block_masks):
                if mask & ~av == 0:
                    assign[v] = i
                    block_masks[i] |= bit
                    search(v + 1, block_masks)
                    block_masks[i] = mask
            if len(block_masks) + 1 < best_count:
                assign[v] = len(block_masks)
                block_masks.append(bit)
                search(v + 1, block_masks)
                block_masks.pop()
            assign[v] = -1

        search(0, [])
    cover = CliqueCover(_blocks_from_assignment(best))
    return cover.size, cover


def clique_cover_number(
    g: SimpleGraph, node_limit: Optional[int] = None
) -> tuple[int, CliqueCover]:
    """Minimum clique partition via coloring the complement graph.

    Color classes of the complement are independent there, hence cliques
    here; the witness is rebuilt in terms of the original graph.
    """
    theta, coloring = chromatic_number(complement(g), node_limit=node_limit)
    cover = CliqueCover(_blocks_from_assignment(coloring))
    return theta, cover


def cover_is_valid(g: SimpleGraph, cover: CliqueCover) -> bool:
    seen: set[int] = set()
    for block in cover.blocks:
        if not block or not is_clique(g, block):
            return False
        if seen & set(block):
            return False
        seen |= set(block)
    return seen == set(range(g.n))


def coloring_is_proper(g: SimpleGraph, coloring: tuple[int, ...]) -> bool:
    if len(coloring) != g.n:
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges)


# Named graphs used throughout the tests and demos.

def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_bipartite_graph(p: int, q: int) -> SimpleGraph:
    return SimpleGraph(p + q, frozenset((u, p + v) for u in range(p) for v in range(q)))


def petersen_graph() -> SimpleGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = set()
    for i in range(5):
        edges.add((i, (i + 1) % 5))
        edges.add((5 + i, 5 + (i + 2) % 5))
        edges.add((i, 5 + i))
    return SimpleGraph(10, frozenset(edges))
