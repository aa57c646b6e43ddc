"""Immutable bitset-backed simple graphs and their structural invariants.

Vertices are the dense integers 0..n-1.  Adjacency is stored as one Python
int per vertex (bit j of row i set iff ij is an edge), so neighbourhood
queries, intersections and unions are single word-parallel operations.
Every function in this module is pure; Graph values are safe to share.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple loop-free undirected graph.

    Instances are immutable and hashable; equality is exact equality of
    the adjacency relation (same n, same edges, same labels).
    """

    __slots__ = ("n", "_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)
        self._hash = hash((n, self._rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitsets (must already be symmetric, loop-free)."""
        g = object.__new__(cls)
        g.n = len(rows)
        g._rows = tuple(rows)
        g._hash = hash((g.n, g._rows))
        full = (1 << g.n) - 1
        for i, row in enumerate(g._rows):
            if row & ~full or row >> i & 1:
                raise ValueError("adjacency rows out of range or with loops")
        for i, row in enumerate(g._rows):
            for j in bits(row):
                if not g._rows[j] >> i & 1:
                    raise ValueError("adjacency not symmetric")
        return g

    def row(self, v: int) -> int:
        return self._rows[v]

    def rows(self) -> tuple[int, ...]:
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            ru = self._rows[u] >> (u + 1)
            for j in bits(ru):
                out.append((u, u + 1 + j))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self._rows))

    def is_regular(self) -> bool:
        degs = {r.bit_count() for r in self._rows}
        return len(degs) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def complement(g: Graph) -> Graph:
    """Complement graph: uv is an edge iff u != v and uv is not an edge of g."""
    full = g.full_mask
    return Graph.from_rows(
        tuple((full & ~r & ~(1 << i)) for i, r in enumerate(g.rows()))
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0..k-1 in increasing order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex index out of range")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        r = 0
        for w in bits(g.row(v)):
            if w in pos:
                r |= 1 << pos[w]
        rows.append(r)
    return Graph.from_rows(tuple(rows))


def subgraph_mask(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of ``mask`` (a bitset)."""
    return induced_subgraph(g, bits(mask))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.row(v)
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    comps = []
    left = g.full_mask
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.row(v)
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        ru = g.row(u)
        high = ru >> (u + 1)
        for j in bits(high):
            if ru & g.row(u + 1 + j):
                return False
    return True


def alpha_at_most_2(g: Graph) -> bool:
    """True iff the independence number is at most 2 (complement triangle-free)."""
    return is_triangle_free(complement(g))


def independence_number_is_2(g: Graph) -> bool:
    """True iff alpha(g) is exactly 2."""
    if not alpha_at_most_2(g):
        return False
    # alpha >= 2 iff some non-adjacent pair exists.
    return any(
        g.row(v) | (1 << v) != g.full_mask for v in range(g.n)
    ) and g.n >= 2


@dataclass(frozen=True)
class InflationSpec:
    """A base graph with one non-negative multiplicity per base vertex.

    The expanded graph replaces base vertex x by a clique of size mult[x],
    with full joins between cliques of adjacent base vertices.  The
    projection maps each expanded vertex back to its base vertex.
    """

    base: Graph
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.mult) != self.base.n:
            raise ValueError("one multiplicity per base vertex required")
        if any(c < 0 for c in self.mult):
            raise ValueError("multiplicities must be non-negative")
        object.__setattr__(self, "mult", tuple(int(c) for c in self.mult))

    @property
    def is_proper(self) -> bool:
        return all(c >= 1 for c in self.mult)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for c in self.mult:
            out.append(out[-1] + c)
        return tuple(out)

    @property
    def expanded_n(self) -> int:
        return self.offsets[-1]

    @cached_property
    def projection(self) -> tuple[int, ...]:
        proj = []
        for x, c in enumerate(self.mult):
            proj.extend([x] * c)
        return tuple(proj)

    def block(self, x: int) -> int:
        """Bitmask of expanded vertices projecting to base vertex x."""
        lo, hi = self.offsets[x], self.offsets[x + 1]
        return ((1 << (hi - lo)) - 1) << lo


def inflate(spec: InflationSpec) -> Graph:
    """Expanded graph of an inflation: cliques joined along base edges."""
    n = spec.expanded_n
    proj = spec.projection
    base = spec.base
    block = [spec.block(x) for x in range(base.n)]
    rows = []
    for v in range(n):
        x = proj[v]
        r = block[x] & ~(1 << v)
        for y in bits(base.row(x)):
            r |= block[y]
        rows.append(r)
    return Graph.from_rows(tuple(rows))


def blow_up(spec: InflationSpec) -> Graph:
    """Expanded graph of a blow-up: independent sets joined along base edges."""
    n = spec.expanded_n
    proj = spec.projection
    base = spec.base
    block = [spec.block(x) for x in range(base.n)]
    rows = []
    for v in range(n):
        x = proj[v]
        r = 0
        for y in bits(base.row(x)):
            r |= block[y]
        rows.append(r)
    return Graph.from_rows(tuple(rows))


def _bfs_dist(g: Graph, source: int) -> list[int | float]:
    dist: list[int | float] = [INFINITE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.row(v)
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in bits(frontier):
            dist[v] = d
    return dist


def diameter(g: Graph) -> int | float:
    """Largest eccentricity; INFINITE when disconnected."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = _bfs_dist(g, v)
        ecc = max(dist)
        if ecc == INFINITE:
            return INFINITE
        best = max(best, ecc)
    return best


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; INFINITE for forests."""
    best: int | float = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        parent = [-1] * g.n
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best - 1:
                break
            for y in bits(g.row(x)):
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and dist[y] >= dist[x]:
                    # Non-tree edge closes a cycle through the BFS tree.
                    best = min(best, dist[x] + dist[y] + 1)
        if best == 3:
            break
    return best


def odd_girth(g: Graph) -> int | float:
    """Length of a shortest odd cycle; INFINITE for bipartite graphs."""
    best: int | float = INFINITE
    for root in range(g.n):
        dist = _bfs_dist(g, root)
        for u in range(g.n):
            if dist[u] is INFINITE:
                continue
            for v in bits(g.row(u) >> (u + 1)):
                v += u + 1
                if dist[v] is not INFINITE and (dist[u] + dist[v]) % 2 == 0:
                    length = dist[u] + dist[v] + 1
                    if length < best:
                        best = length
        if best == 3:
            break
    return best


def twins(g: Graph) -> list[tuple[int, int]]:
    """Non-adjacent pairs with identical neighbourhoods."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and g.row(u) == g.row(v):
                out.append((u, v))
    return out


def adjacent_twins(g: Graph) -> list[tuple[int, int]]:
    """Adjacent pairs whose neighbourhoods agree off the pair itself."""
    out = []
    for u in range(g.n):
        ru = g.row(u)
        for v in bits(ru >> (u + 1)):
            v += u + 1
            if ru & ~(1 << v) == g.row(v) & ~(1 << u):
                out.append((u, v))
    return out


class _Dinic:
    """Unit-capacity max-flow used for vertex connectivity."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in self.head[u]:
                    if self.cap[e] and level[self.to[e]] == -1:
                        level[self.to[e]] = level[u] + 1
                        queue.append(self.to[e])
            if level[t] == -1:
                break
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while flow < limit:
                pushed = dfs(s, limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow


def _pair_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Max number of internally vertex-disjoint s-t paths, capped at limit."""
    net = _Dinic(2 * g.n)
    big = g.n
    for v in range(g.n):
        net.add_edge(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
    for u, v in g.edges():
        net.add_edge(2 * u + 1, 2 * v, big)
        net.add_edge(2 * v + 1, 2 * u, big)
    return net.max_flow(2 * s + 1, 2 * t, limit)


def vertex_connectivity(g: Graph, *, at_least: int | None = None) -> int:
    """Minimum vertex cut size; n-1 for complete graphs.

    With ``at_least=k`` the computation may stop early and return k as soon
    as connectivity >= k is established (each pair flow is capped at k).
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if all(g.degree(v) == n - 1 for v in range(n)):
        k = n - 1
        return min(k, at_least) if at_least is not None else k
    if not is_connected(g):
        return 0
    cap = min(g.degree(v) for v in range(n))
    if at_least is not None:
        cap = min(cap, at_least)
    best = cap
    # Classic reduction: with v a fixed min-degree vertex, every minimum cut
    # is witnessed either by a flow from v to a non-neighbour, or by a flow
    # between two non-adjacent neighbours of v.
    v = min(range(n), key=g.degree)
    nonnbrs = g.full_mask & ~g.row(v) & ~(1 << v)
    for t in bits(nonnbrs):
        best = min(best, _pair_connectivity(g, v, t, best))
        if best == 0:
            return 0
    nbrs = list(bits(g.row(v)))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, _pair_connectivity(g, x, y, best))
    return best
