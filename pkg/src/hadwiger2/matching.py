"""Maximum matching in general graphs and the alpha<=2 chromatic shortcut.

The matching routine is Edmonds' blossom algorithm in its classic
odd-cycle-shrinking form: breadth-first alternating forests with blossom
bases tracked per vertex, one augmentation per exposed root.  Downstream
code relies only on the size or validity of the returned matching, never
on which maximum matching is produced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, alpha_at_most_2, bits, complement


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u in seen or v in seen or u == v:
                raise ValueError("matching edges must be vertex-disjoint")
            seen.update((u, v))
        object.__setattr__(
            self,
            "edges",
            tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges)),
        )

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask

    def is_matching_of(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges)


def _greedy_matching(g: Graph) -> list[int]:
    match = [-1] * g.n
    for v in range(g.n):
        if match[v] == -1:
            for w in bits(g.row(v)):
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break
    return match


def _find_augmenting(
    g: Graph, match: list[int], root: int, forbidden: int = 0
) -> tuple[int, list[int]]:
    n = g.n
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in bits(g.row(v) & ~forbidden):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur_base = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def maximum_matching(g: Graph) -> Matching:
    """One maximum matching of g (the size is canonical, the edges are not)."""
    match = _greedy_matching(g)
    for root in range(g.n):
        if match[root] != -1:
            continue
        end, parent = _find_augmenting(g, match, root)
        if end == -1:
            continue
        while end != -1:
            prev = parent[end]
            nxt = match[prev]
            match[end] = prev
            match[prev] = end
            end = nxt
    edges = tuple(
        (v, match[v]) for v in range(g.n) if match[v] > v
    )
    return Matching(edges)


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def chromatic_number_alpha2(g: Graph) -> int:
    """chi(g) computed as n minus the matching number of the complement.

    Valid exactly when alpha(g) <= 2: colour classes have size at most 2,
    and the size-2 classes form a matching of the complement.
    """
    if not alpha_at_most_2(g):
        raise ValueError("chromatic shortcut requires independence number <= 2")
    return g.n - matching_number(complement(g))


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def all_vertices_inessential(g: Graph) -> bool:
    """True iff mu(g - v) = mu(g) for every vertex v.

    One maximum matching is computed once; an unmatched vertex is
    inessential outright, and a matched vertex v is inessential iff a
    single augmentation from its partner succeeds with v forbidden.
    """
    base = _greedy_matching(g)
    for root in range(g.n):
        if base[root] != -1:
            continue
        end, parent = _find_augmenting(g, base, root)
        while end != -1:
            prev = parent[end]
            nxt = base[prev]
            base[end] = prev
            base[prev] = end
            end = nxt
    for v in range(g.n):
        w = base[v]
        if w == -1:
            continue
        match = list(base)
        match[v] = -1
        match[w] = -1
        end, _ = _find_augmenting(g, match, w, forbidden=1 << v)
        if end == -1:
            return False
    return True


def is_factor_critical(g: Graph) -> bool:
    """True iff deleting any single vertex leaves a perfect matching."""
    if g.n % 2 == 0 or g.n == 0:
        return False
    if matching_number(g) != (g.n - 1) // 2:
        return False
    return all_vertices_inessential(g)


def is_vertex_critical_alpha2(g: Graph) -> bool:
    """True iff chi(g - v) < chi(g) for every vertex, via the matching shortcut.

    chi(g - v) < chi(g) unwinds to mu(complement(g) - v) = mu(complement(g)),
    so criticality is exactly every complement vertex being inessential.
    """
    if not alpha_at_most_2(g):
        raise ValueError("chromatic shortcut requires independence number <= 2")
    return all_vertices_inessential(complement(g))
