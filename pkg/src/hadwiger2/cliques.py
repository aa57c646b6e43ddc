"""Exact maximum clique and clique enumeration over bitset adjacency.

The solver is a branch-and-bound in the Tomita style: candidates are
greedily partitioned into independent classes, and branches are explored
in decreasing class index so the bound prunes whole suffixes.  For
regular hosts a Hoffman ratio bound on the complement (least adjacency
eigenvalue) is tried first; when the multi-start greedy incumbent meets
it, optimality is certified without any search, which settles the large
vertex-transitive instances (Kneser-type graphs, block-graph
complements) where the colouring bound is far from tight.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graphs import Graph, bits


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    mask = 0
    for v in vs:
        mask |= 1 << v
    if len(set(vs)) != len(vs):
        return False
    return all(g.row(v) & mask == mask & ~(1 << v) for v in vs)


def _greedy_clique(g: Graph, start: int, order_key) -> int:
    mask = 1 << start
    cand = g.row(start)
    while cand:
        v = order_key(cand)
        mask |= 1 << v
        cand &= g.row(v)
    return mask


def _initial_incumbent(g: Graph) -> int:
    """Deterministic multi-start greedy clique, returned as a bitmask."""
    if g.n == 0:
        return 0
    degs = [g.degree(v) for v in range(g.n)]

    def by_low(cand: int) -> int:
        return (cand & -cand).bit_length() - 1

    def by_degree(cand: int) -> int:
        return max(bits(cand), key=lambda v: (degs[v], -v))

    def by_local_degree(cand: int) -> int:
        return max(bits(cand), key=lambda v: ((g.row(v) & cand).bit_count(), -v))

    best = 0
    starts = sorted(range(g.n), key=lambda v: -degs[v])[: max(4, g.n // 16)]
    for start in starts:
        for key in (by_low, by_degree, by_local_degree):
            mask = _greedy_clique(g, start, key)
            if mask.bit_count() > best.bit_count():
                best = mask
    return best


def _ratio_upper_bound(g: Graph) -> int | None:
    """Hoffman bound on omega(g) via the complement: for a d-regular
    complement with least eigenvalue s, alpha(complement) <= n(-s)/(d-s).

    eigvalsh errors are ~1e-12 at these sizes; the 1e-6 slack can only
    round the floor up, never below the true bound, so the result is a
    sound upper bound.
    """
    if not g.is_regular() or g.n < 3:
        return None
    d = g.n - 1 - g.degree(0)  # complement degree
    if d <= 0:
        return None
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        row = g.row(u)
        for v in range(g.n):
            if v != u and not row >> v & 1:
                a[u, v] = 1.0
    s = float(np.linalg.eigvalsh(a)[0])
    if s >= 0:
        return None
    return int((g.n * (-s)) / (d - s) + 1e-6)


def max_clique(g: Graph) -> tuple[int, ...]:
    """An exact maximum clique, as a sorted vertex tuple."""
    if g.n == 0:
        return ()
    rows = g.rows()
    best_mask = _initial_incumbent(g)
    best = best_mask.bit_count()
    if g.n > 40:
        upper = _ratio_upper_bound(g)
        if upper is not None and best >= upper:
            return tuple(bits(best_mask))

    def expand(r_size: int, r_mask: int, cand: int) -> None:
        nonlocal best, best_mask
        # Greedy colouring: peel independent classes, recording each
        # vertex's class number; process high classes first.
        ordered: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            q = rest
            while q:
                v = (q & -q).bit_length() - 1
                ordered.append((v, color))
                rest &= ~(1 << v)
                q &= ~rows[v] & rest
        for v, c in reversed(ordered):
            if r_size + c <= best:
                return
            new_cand = cand & rows[v]
            if r_size + 1 + new_cand.bit_count() > best:
                if new_cand:
                    expand(r_size + 1, r_mask | (1 << v), new_cand)
                elif r_size + 1 > best:
                    best = r_size + 1
                    best_mask = r_mask | (1 << v)
            elif r_size + 1 > best:
                best = r_size + 1
                best_mask = r_mask | (1 << v)
            cand &= ~(1 << v)

    expand(0, 0, g.full_mask)
    return tuple(bits(best_mask))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def maximal_cliques(g: Graph) -> Iterator[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    rows = g.rows()

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        # Pivot on the vertex of p|x covering most of p.
        pivot = max(bits(p | x), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            vb = 1 << v
            yield from bk(r | vb, p & rows[v], x & rows[v])
            p &= ~vb
            x |= vb

    if g.n:
        yield from bk(0, g.full_mask, 0)


def all_cliques(g: Graph) -> Iterator[int]:
    """Every clique of g as a bitmask, including the empty clique."""
    rows = g.rows()

    def grow(r: int, cand: int) -> Iterator[int]:
        yield r
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            yield from grow(r | (1 << v), cand & rows[v])

    yield from grow(0, g.full_mask)
