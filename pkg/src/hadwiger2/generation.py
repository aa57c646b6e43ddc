"""Isomorph-free exhaustive generation of the alpha<=2 universe.

Triangle-free graphs are generated level by level on the complement
side: every triangle-free graph on k+1 vertices arises from one on k
vertices by adding a vertex whose neighbourhood is an independent set,
so each level is the deduplicated closure of those extensions.
Deduplication buckets by a Weisfeiler-Lehman invariant and settles
collisions with an exact isomorphism test.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graphs import Graph, complement, is_connected
from .iso import canonical_invariant, is_isomorphic

MAX_DESK_N = 10


def independent_set_masks(g: Graph) -> list[int]:
    """All independent sets of g as bitmasks, the empty set included."""
    out = []

    def rec(chosen: int, avail: int) -> None:
        out.append(chosen)
        a = avail
        while a:
            v = a & -a
            a &= ~v
            vi = v.bit_length() - 1
            rec(chosen | v, a & ~g.row(vi))

    rec(0, g.full_mask)
    return out


def _extend(parent: Graph) -> Iterator[Graph]:
    k = parent.n
    for mask in independent_set_masks(parent):
        rows = [r | ((mask >> i & 1) << k) for i, r in enumerate(parent.rows())]
        rows.append(mask)
        yield Graph.from_rows(tuple(rows))


def _dedup_insert(bucket_map: dict, g: Graph) -> bool:
    key = canonical_invariant(g)
    bucket = bucket_map.setdefault(key, [])
    for other in bucket:
        if is_isomorphic(g, other):
            return False
    bucket.append(g)
    return True


def triangle_free_graphs(max_n: int) -> dict[int, list[Graph]]:
    """All unlabelled triangle-free graphs on 1..max_n vertices."""
    if max_n < 1:
        raise ValueError("need max_n >= 1")
    levels: dict[int, list[Graph]] = {1: [Graph(1)]}
    for k in range(1, max_n):
        buckets: dict = {}
        out: list[Graph] = []
        for parent in levels[k]:
            for child in _extend(parent):
                if _dedup_insert(buckets, child):
                    out.append(child)
        levels[k + 1] = out
    return levels


def enumerate_alpha2(
    max_n: int,
    sink: Callable[[Graph], None],
    *,
    levels: dict[int, list[Graph]] | None = None,
) -> dict[int, int]:
    """Invoke ``sink`` on every connected graph with alpha <= 2, per order.

    Generation runs on triangle-free complements; a graph is emitted when
    its complement is connected.  Returns the per-order counts of emitted
    graphs.  Desk scale only: max_n is capped at 10.
    """
    if max_n > MAX_DESK_N:
        raise ValueError(f"enumeration is desk-scale only (max_n <= {MAX_DESK_N})")
    if levels is None:
        levels = triangle_free_graphs(max_n)
    counts: dict[int, int] = {}
    for n in range(1, max_n + 1):
        count = 0
        for h in levels[n]:
            g = complement(h)
            if is_connected(g):
                sink(g)
                count += 1
        counts[n] = count
    return counts


def connected_alpha2_graphs(n: int, levels=None) -> list[Graph]:
    """The connected graphs with alpha <= 2 on exactly n vertices."""
    if levels is None:
        levels = triangle_free_graphs(n)
    return [complement(h) for h in levels[n] if is_connected(complement(h))]
