"""Isomorphism testing and induced-subgraph search by refinement + backtracking."""

from __future__ import annotations

import hashlib
from typing import Iterator

from .graphs import Graph, bits, complement


def wl_colors(g: Graph, rounds: int | None = None) -> tuple[int, ...]:
    """Stable colouring from iterated neighbourhood-colour refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    if rounds is None:
        rounds = g.n
    for _ in range(rounds):
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in bits(g.row(v)))))
            for v in range(g.n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def wl_hash(g: Graph) -> str:
    """Isomorphism-invariant hash (collisions possible, never false splits)."""
    colors = wl_colors(g)
    payload = repr((g.n, g.edge_count, tuple(sorted(colors))))
    return hashlib.sha256(payload.encode()).hexdigest()


def induced_embeddings(
    pattern: Graph, host: Graph, *, limit: int = 1
) -> Iterator[tuple[int, ...]]:
    """Yield mappings pattern -> host realising pattern as an induced subgraph.

    Backtracking over pattern vertices in a most-constrained-first static
    order, with degree pruning and bitset consistency: mapped vertices must
    reproduce both pattern adjacency and pattern non-adjacency.
    """
    k, n = pattern.n, host.n
    if k > n:
        return
    # Order pattern vertices so each (after the first) touches earlier ones
    # where possible; high degree first breaks more branches early.
    order: list[int] = []
    placed = 0
    while len(order) < k:
        cands = [v for v in range(k) if not placed >> v & 1]
        cands.sort(key=lambda v: (-(pattern.row(v) & placed).bit_count(), -pattern.degree(v), v))
        v = cands[0]
        order.append(v)
        placed |= 1 << v
    host_deg = [host.degree(v) for v in range(n)]
    pat_deg = [pattern.degree(v) for v in range(k)]

    mapping = [-1] * k
    used = 0
    count = 0

    def candidates(idx: int) -> int:
        v = order[idx]
        cand = host.full_mask & ~used
        for j in range(idx):
            w = order[j]
            hv = mapping[w]
            if pattern.has_edge(v, w):
                cand &= host.row(hv)
            else:
                cand &= ~host.row(hv)
        return cand

    def search(idx: int) -> Iterator[tuple[int, ...]]:
        nonlocal used, count
        if idx == k:
            yield tuple(mapping)
            return
        v = order[idx]
        for hv in bits(candidates(idx)):
            if host_deg[hv] < pat_deg[v]:
                continue
            mapping[v] = hv
            used |= 1 << hv
            yield from search(idx + 1)
            used &= ~(1 << hv)
            mapping[v] = -1

    for m in search(0):
        yield m
        count += 1
        if limit and count >= limit:
            return


def has_induced_subgraph(host: Graph, pattern: Graph) -> bool:
    for _ in induced_embeddings(pattern, host, limit=1):
        return True
    return False


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if sorted(wl_colors(g)) != sorted(wl_colors(h)):
        return False
    return has_induced_subgraph(h, g)


def find_induced_c5(g: Graph) -> tuple[int, ...] | None:
    """First induced 5-cycle (a,b,c,d,e) in lexicographic order, or None."""
    n = g.n
    for a in range(n):
        ra = g.row(a)
        for b in bits(ra):
            if b == a:
                continue
            rb = g.row(b)
            # c adjacent to b, not to a
            for c in bits(rb & ~ra & ~(1 << a)):
                rc = g.row(c)
                # d adjacent to c, not to a or b
                for d in bits(rc & ~ra & ~rb & ~(1 << a) & ~(1 << b)):
                    rd = g.row(d)
                    # e adjacent to d and a, not to b or c
                    for e in bits(rd & ra & ~rb & ~rc):
                        return (a, b, c, d, e)
    return None


def is_c5_free(g: Graph) -> bool:
    return find_induced_c5(g) is None


def canonical_invariant(g: Graph) -> tuple:
    """Cheap invariant tuple used to bucket graphs before exact iso tests."""
    return (
        g.n,
        g.edge_count,
        g.degree_sequence(),
        tuple(sorted(wl_colors(g))),
        tuple(sorted(wl_colors(complement(g)))) if g.n else (),
    )
