"""Shared fixtures and independent brute-force oracles.

Every oracle here recomputes its quantity from first principles
(exhaustive enumeration, backtracking over labelled objects, boolean
matrix powers) so the production algorithms are checked against code
that shares none of their logic.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from hadwiger2.graphs import Graph, bits
from hadwiger2.rng import SplitMix64


def brute_independence_number(g: Graph) -> int:
    best = 0

    def rec(chosen: int, avail: int) -> None:
        nonlocal best
        best = max(best, chosen.bit_count())
        if chosen.bit_count() + avail.bit_count() <= best:
            return
        a = avail
        while a:
            v = a & -a
            a &= ~v
            rec(chosen | v, a & ~g.row(v.bit_length() - 1))

    rec(0, g.full_mask)
    return best


def brute_clique_number(g: Graph) -> int:
    best = 0

    def rec(chosen: int, avail: int) -> None:
        nonlocal best
        best = max(best, chosen.bit_count())
        if chosen.bit_count() + avail.bit_count() <= best:
            return
        a = avail
        while a:
            v = a & -a
            a &= ~v
            rec(chosen | v, a & g.row(v.bit_length() - 1))

    rec(0, g.full_mask)
    return best


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if _colourable(g, k):
            return k
    raise AssertionError("unreachable")


def _colourable(g: Graph, k: int) -> bool:
    colors = [-1] * g.n

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = set(colors[w] for w in bits(g.row(v)) if colors[w] >= 0)
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if rec(v + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return rec(0, 0)


def brute_matching_number(g: Graph) -> int:
    edges = g.edges()

    def rec(i: int, used: int) -> int:
        best = 0
        for j in range(i, len(edges)):
            u, v = edges[j]
            if used >> u & 1 or used >> v & 1:
                continue
            best = max(best, 1 + rec(j + 1, used | (1 << u) | (1 << v)))
        return best

    return rec(0, 0)


def all_matchings(g: Graph):
    edges = g.edges()

    def rec(i: int, used: int, chosen: tuple):
        yield chosen
        for j in range(i, len(edges)):
            u, v = edges[j]
            if used >> u & 1 or used >> v & 1:
                continue
            yield from rec(j + 1, used | (1 << u) | (1 << v), chosen + (edges[j],))

    yield from rec(0, 0, ())


def brute_connected_matching_number(g: Graph) -> int:
    best = 0
    for m in all_matchings(g):
        ok = True
        for i in range(len(m)):
            u, v = m[i]
            reach = g.row(u) | g.row(v)
            for x, y in m[i + 1:]:
                if not (reach >> x & 1 or reach >> y & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = max(best, len(m))
    return best


def brute_odd_girth(g: Graph):
    """Shortest odd closed walk via boolean adjacency powers."""
    if g.n == 0:
        return float("inf")
    a = np.zeros((g.n, g.n), dtype=bool)
    for u in range(g.n):
        for v in bits(g.row(u)):
            a[u, v] = True
    power = a.copy()
    for length in range(1, g.n + 1):
        if length % 2 == 1 and power.diagonal().any():
            return length
        power = power @ a
    return float("inf")


def brute_girth(g: Graph):
    """Shortest cycle by bounded DFS over simple paths from each least vertex."""
    best = float("inf")

    def dfs(start: int, v: int, visited: int, length: int):
        nonlocal best
        if length + 1 >= best:
            return
        for w in bits(g.row(v)):
            if w == start and length >= 2:
                best = min(best, length + 1)
            elif w > start and not visited >> w & 1:
                dfs(start, w, visited | (1 << w), length + 1)

    for s in range(g.n):
        dfs(s, s, 1 << s, 0)
    return best


def brute_vertex_connectivity(g: Graph) -> int:
    from hadwiger2.graphs import is_connected, induced_subgraph

    n = g.n
    if all(g.degree(v) == n - 1 for v in range(n)):
        return n - 1
    for size in range(0, n - 1):
        for cut in combinations(range(n), size):
            rest = [v for v in range(n) if v not in cut]
            if not is_connected(induced_subgraph(g, rest)):
                return size
    return n - 1


def brute_diameter(g: Graph):
    """All-pairs shortest paths via boolean reachability powers."""
    if g.n == 0:
        raise ValueError
    a = np.eye(g.n, dtype=bool)
    for u in range(g.n):
        for v in bits(g.row(u)):
            a[u, v] = True
    reach = np.eye(g.n, dtype=bool)
    for d in range(0, g.n):
        if reach.all():
            return d
        reach = reach @ a
    if reach.all():
        return g.n
    return float("inf")


def brute_max_t_intersecting(n: int, k: int, t: int) -> int:
    """Largest family of k-subsets of [n] pairwise intersecting in >= t."""
    sets = [frozenset(c) for c in combinations(range(n), k)]

    def rec(chosen: int, cands: list[int]) -> int:
        best = chosen
        for i, s in enumerate(cands):
            if chosen + len(cands) - i <= best:
                break
            nxt = [x for x in cands[i + 1:] if len(sets[s] & sets[x]) >= t]
            best = max(best, rec(chosen + 1, nxt))
        return best

    return rec(0, list(range(len(sets))))


def brute_clique_number_simple(g: Graph) -> int:
    """Carraghan-Pardalos style maximum clique, independent of cliques.py."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def rec(count: int, cands: list[int]) -> int:
        best = count
        for i, v in enumerate(cands):
            if count + len(cands) - i <= best:
                break
            nxt = [w for w in cands[i + 1:] if g.has_edge(v, w)]
            best = max(best, rec(count + 1, nxt))
        return best

    return rec(0, order)


def milp_clique_number(g: Graph) -> int:
    """Exact maximum clique by integer programming (HiGHS branch and cut).

    Entirely separate machinery from the combinatorial solvers: maximise
    sum x_v subject to x_u + x_v <= 1 for every non-edge.
    """
    from scipy.optimize import LinearConstraint, milp

    if g.n == 0:
        return 0
    rows = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                row = [0.0] * g.n
                row[u] = row[v] = 1.0
                rows.append(row)
    constraints = [LinearConstraint(rows, ub=1.0)] if rows else []
    res = milp(
        c=[-1.0] * g.n,
        integrality=[1] * g.n,
        bounds=(0, 1),
        constraints=constraints,
    )
    assert res.success
    return round(-res.fun)


def random_graph(n: int, p_numerator: int, rng: SplitMix64) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.randrange(100) < p_numerator:
                edges.append((u, v))
    return Graph(n, edges)


@pytest.fixture(scope="session")
def steiner_system():
    from hadwiger2.steiner import steiner_3_6_22

    return steiner_3_6_22()


@pytest.fixture(scope="session")
def tf_levels_8():
    from hadwiger2.generation import triangle_free_graphs

    return triangle_free_graphs(8)


@pytest.fixture(scope="session")
def tf_levels_9(tf_levels_8):
    from hadwiger2.generation import _extend, _dedup_insert

    levels = dict(tf_levels_8)
    buckets: dict = {}
    out = []
    for parent in levels[8]:
        for child in _extend(parent):
            if _dedup_insert(buckets, child):
                out.append(child)
    levels[9] = out
    return levels
